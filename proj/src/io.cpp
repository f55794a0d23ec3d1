#include "nebc/io.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace nebc {

namespace {

using json = nlohmann::json;

Rational number_field(const json& v, const std::string& what) {
  if (v.is_string()) return parse_rational(v.get<std::string>());
  if (v.is_number_integer()) return Rational(BigInt(v.get<long long>()));
  if (v.is_number_unsigned()) return Rational(BigInt(v.get<unsigned long long>()));
  if (v.is_number_float())
    throw std::invalid_argument(what + ": floating-point literals are not accepted, quote the value as a string");
  throw std::invalid_argument(what + ": expected a number string");
}

json parse_json(const std::string& text) {
  json doc = json::parse(text, nullptr, false);
  if (doc.is_discarded()) throw std::invalid_argument("malformed JSON document");
  return doc;
}

}  // namespace

Instance read_instance(const std::string& text) {
  json doc = parse_json(text);
  if (!doc.is_object() || !doc.contains("delta") || !doc.contains("sizes"))
    throw std::invalid_argument("instance document must contain 'delta' and 'sizes'");
  Instance inst;
  inst.delta = number_field(doc["delta"], "delta");
  if (!doc["sizes"].is_array()) throw std::invalid_argument("'sizes' must be an array");
  for (const auto& v : doc["sizes"]) inst.sizes.push_back(number_field(v, "size"));
  inst.validate();
  return inst;
}

std::string write_instance(const Instance& inst) {
  nlohmann::ordered_json doc;
  doc["delta"] = rat_str(inst.delta);
  auto sizes = nlohmann::ordered_json::array();
  for (const Rational& s : inst.sizes) sizes.push_back(rat_str(s));
  doc["sizes"] = std::move(sizes);
  return doc.dump(2) + "\n";
}

Packing read_packing(const std::string& text) {
  json doc = parse_json(text);
  if (!doc.is_object() || !doc.contains("bins") || !doc["bins"].is_array())
    throw std::invalid_argument("packing document must contain a 'bins' array");
  Packing p;
  std::vector<long long> seen;
  for (const auto& bin : doc["bins"]) {
    if (!bin.is_array()) throw std::invalid_argument("each bin must be an array of item indices");
    std::vector<int> items;
    for (const auto& v : bin) {
      if (!v.is_number_integer() && !v.is_number_unsigned())
        throw std::invalid_argument("item indices must be integers");
      long long j = v.get<long long>();
      if (j < 0) throw std::invalid_argument("negative item index");
      items.push_back(static_cast<int>(j));
      seen.push_back(j);
    }
    p.bins.push_back(std::move(items));
  }
  std::sort(seen.begin(), seen.end());
  for (size_t i = 1; i < seen.size(); ++i)
    if (seen[i] == seen[i - 1])
      throw std::invalid_argument("duplicate item index in packing: " + std::to_string(seen[i]));
  return p;
}

std::string write_packing(const Packing& packing) {
  nlohmann::ordered_json doc;
  auto bins = nlohmann::ordered_json::array();
  for (const auto& bin : packing.bins) bins.push_back(bin);
  doc["bins"] = std::move(bins);
  return doc.dump(2) + "\n";
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::invalid_argument("cannot open file: " + path);
  std::ostringstream out;
  out << in.rdbuf();
  return out.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::invalid_argument("cannot write file: " + path);
  out << content;
}

std::string instance_digest(const Instance& inst) {
  std::string canon = write_instance(inst);
  unsigned long long h = 1469598103934665603ull;
  for (unsigned char c : canon) {
    h ^= c;
    h *= 1099511628211ull;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", h);
  return std::string(buf);
}

}  // namespace nebc
