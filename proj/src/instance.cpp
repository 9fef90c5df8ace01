#include "swos/instance.hpp"

#include <bit>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace swos {

int bits_for(i64 v) {
  if (v < 0) throw std::invalid_argument("bits_for: negative value");
  return std::bit_width(static_cast<u64>(v));
}

void ProblemInstance::validate() const {
  if (n() < 1) throw std::invalid_argument("instance: empty value array");
  if (k < 1 || k > n()) throw std::invalid_argument("instance: window length out of [1, n]");
  if (l < 1 || l > k) throw std::invalid_argument("instance: rank out of [1, k]");
  if (r < 0) throw std::invalid_argument("instance: negative value bound");
  for (i64 v : values) {
    if (v < 0 || v > r) throw std::invalid_argument("instance: value out of [0, r]");
  }
}

ProblemInstance read_instance(std::istream& is) {
  ProblemInstance inst;
  i64 n = 0;
  if (!(is >> n >> inst.k >> inst.r >> inst.l)) {
    throw std::invalid_argument("instance parse: bad header, expected \"N K R l\"");
  }
  if (n < 1) throw std::invalid_argument("instance parse: non-positive N");
  inst.values.resize(static_cast<size_t>(n));
  for (i64 i = 0; i < n; ++i) {
    if (!(is >> inst.values[static_cast<size_t>(i)])) {
      throw std::invalid_argument("instance parse: expected " + std::to_string(n) +
                                  " values, got " + std::to_string(i));
    }
  }
  inst.validate();
  return inst;
}

void write_instance(const ProblemInstance& inst, std::ostream& os) {
  os << inst.n() << ' ' << inst.k << ' ' << inst.r << ' ' << inst.l << '\n';
  for (i64 i = 0; i < inst.n(); ++i) {
    os << inst.values[static_cast<size_t>(i)];
    os << ((i + 1) % 16 == 0 || i + 1 == inst.n() ? '\n' : ' ');
  }
}

ProblemInstance load_instance_file(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw std::runtime_error("cannot open instance file: " + path);
  return read_instance(f);
}

void save_instance_file(const ProblemInstance& inst, const std::string& path) {
  std::ofstream f(path);
  if (!f) throw std::runtime_error("cannot open output file: " + path);
  write_instance(inst, f);
}

}  // namespace swos
