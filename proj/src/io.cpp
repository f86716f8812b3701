#include "btl/io.hpp"

#include <bit>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace btl {

namespace {

const char* range_name(RangeKind k) {
  return k == RangeKind::PmOne ? "pm_one" : "extended_int";
}

RangeKind range_from_name(const std::string& s) {
  if (s == "pm_one") return RangeKind::PmOne;
  if (s == "extended_int") return RangeKind::ExtendedInt;
  throw std::invalid_argument("truth table: unknown range kind '" + s + "'");
}

}  // namespace

void write_truth_table(std::ostream& out, const BFunc& f, bool hex_packed) {
  f.validate();
  if (hex_packed && f.range_kind != RangeKind::PmOne)
    throw std::invalid_argument("write_truth_table: only pm_one tables can be packed");
  out << "n=" << f.n << " range=" << range_name(f.range_kind);
  if (hex_packed) {
    out << " packed=hex\n";
    size_t size = f.values.size();
    for (size_t base = 0; base < size; base += 4) {
      int nibble = 0;
      for (size_t j = 0; j < 4 && base + j < size; ++j)
        if (f.values[base + j] == 1) nibble |= 1 << j;
      out << "0123456789abcdef"[nibble];
    }
    out << '\n';
    return;
  }
  out << '\n';
  for (size_t i = 0; i < f.values.size(); ++i)
    out << f.values[i] << ((i + 1) % 16 == 0 || i + 1 == f.values.size() ? '\n' : ' ');
}

BFunc read_truth_table(std::istream& in) {
  std::string header;
  if (!std::getline(in, header)) throw std::invalid_argument("truth table: empty input");
  std::istringstream hs(header);
  std::string tok;
  int n = -1;
  RangeKind kind = RangeKind::PmOne;
  bool packed = false;
  while (hs >> tok) {
    auto eq = tok.find('=');
    if (eq == std::string::npos)
      throw std::invalid_argument("truth table: malformed header token '" + tok + "'");
    std::string key = tok.substr(0, eq), val = tok.substr(eq + 1);
    if (key == "n")
      n = std::stoi(val);
    else if (key == "range")
      kind = range_from_name(val);
    else if (key == "packed" && val == "hex")
      packed = true;
    else
      throw std::invalid_argument("truth table: unknown header token '" + tok + "'");
  }
  if (n < 0 || n > kMaxDim) throw std::invalid_argument("truth table: bad dimension");

  BFunc f;
  f.n = n;
  f.range_kind = kind;
  size_t size = size_t(1) << n;
  f.values.resize(size);
  if (packed) {
    if (kind != RangeKind::PmOne)
      throw std::invalid_argument("truth table: packed requires pm_one");
    std::string hex;
    in >> hex;
    if (hex.size() != (size + 3) / 4)
      throw std::invalid_argument("truth table: packed payload has wrong length");
    for (size_t i = 0; i < size; ++i) {
      char c = hex[i / 4];
      int nibble = c >= '0' && c <= '9'   ? c - '0'
                   : c >= 'a' && c <= 'f' ? c - 'a' + 10
                   : c >= 'A' && c <= 'F' ? c - 'A' + 10
                                          : -1;
      if (nibble < 0) throw std::invalid_argument("truth table: bad hex digit");
      f.values[i] = (nibble >> (i % 4)) & 1 ? 1 : -1;
    }
  } else {
    for (size_t i = 0; i < size; ++i) {
      long long v;
      if (!(in >> v)) throw std::invalid_argument("truth table: truncated payload");
      f.values[i] = int32_t(v);
    }
  }
  f.validate();
  return f;
}

void write_truth_table_file(const std::string& path, const BFunc& f, bool hex_packed) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open for writing: " + path);
  write_truth_table(out, f, hex_packed);
}

BFunc read_truth_table_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open for reading: " + path);
  return read_truth_table(in);
}

void write_spectrum_csv(std::ostream& out, const Spectrum& s, bool include_zeros) {
  out << "mask,setsize,coeff_numerator\n";
  for (Mask set = 0; set < s.coeffs.size(); ++set) {
    if (!include_zeros && s.coeffs[set] == 0) continue;
    out << set << ',' << std::popcount(set) << ',' << s.coeffs[set] << '\n';
  }
}

std::string instance_to_json(const DisjInstance& inst) {
  inst.validate();
  nlohmann::json j;
  j["ell"] = inst.ell;
  j["m"] = inst.m;
  j["promise"] = inst.promise == Promise::SparseK ? "sparse_k" : "none";
  if (inst.promise == Promise::SparseK) j["k"] = inst.k;
  j["x_blocks"] = inst.x_blocks;
  j["y_blocks"] = inst.y_blocks;
  return j.dump(2);
}

DisjInstance instance_from_json(const std::string& text) {
  nlohmann::json j = nlohmann::json::parse(text);
  DisjInstance inst;
  inst.ell = j.at("ell").get<int>();
  inst.m = j.at("m").get<int>();
  std::string promise = j.at("promise").get<std::string>();
  if (promise == "sparse_k") {
    inst.promise = Promise::SparseK;
    inst.k = j.at("k").get<int>();
  } else if (promise == "none") {
    inst.promise = Promise::None;
  } else {
    throw std::invalid_argument("instance: unknown promise '" + promise + "'");
  }
  inst.x_blocks = j.at("x_blocks").get<std::vector<Mask>>();
  inst.y_blocks = j.at("y_blocks").get<std::vector<Mask>>();
  inst.validate();
  return inst;
}

std::string violation_report_to_json(const ViolationReport& r, const DistanceBounds* bounds) {
  nlohmann::json j;
  j["n"] = r.n;
  j["ell_bits"] = r.ell_bits;
  j["total_edges"] = r.total_edges;
  j["violated_by_direction"] = r.violated_by_direction;
  j["violated_by_suffix_direction_and_index"] = r.violated_by_suffix_direction_and_index;
  j["violated_edges_total"] = r.violated_edges_total();
  if (r.violated_pair_count) j["violated_pair_count"] = *r.violated_pair_count;
  if (bounds) {
    j["distance_lower"] = {{"num", bounds->lower.num},
                           {"log2_den", bounds->lower.log2_den},
                           {"value", bounds->lower.value()},
                           {"method", bounds->lower_method}};
    j["distance_upper"] = {{"num", bounds->upper.num},
                           {"log2_den", bounds->upper.log2_den},
                           {"value", bounds->upper.value()},
                           {"method", bounds->upper_method}};
  }
  return j.dump(2);
}

}  // namespace btl
