#include "tsurf/symring/monomial.hpp"

namespace tsurf::sym {

namespace {

constexpr int kBias[kNumGens] = {128, 0, 0, 0, 0, 0, 0};

int field(std::uint64_t bits, int i) { return static_cast<int>((bits >> (8 * i)) & 0xff); }

std::uint64_t pack_field(int i, int e) {
  const int stored = e + kBias[i];
  if (stored < 0 || stored > 255) {
    throw ExponentOverflow(std::string("exponent of ") + gen_name(static_cast<Gen>(i)) +
                           " out of range: " + std::to_string(e));
  }
  return static_cast<std::uint64_t>(stored) << (8 * i);
}

}  // namespace

const char* gen_name(Gen g) {
  static const char* names[kNumGens] = {"A", "A1", "A2", "A3", "T", "T1", "T2"};
  return names[static_cast<int>(g)];
}

Monomial Monomial::gen(Gen g, int e) { return Monomial().with_exp(g, e); }

Monomial Monomial::from_exponents(const std::array<int, kNumGens>& e) {
  std::uint64_t b = 0;
  for (int i = 0; i < kNumGens; ++i) b |= pack_field(i, e[i]);
  return Monomial(b);
}

int Monomial::exp(Gen g) const {
  const int i = static_cast<int>(g);
  return field(bits_, i) - kBias[i];
}

std::array<int, kNumGens> Monomial::exponents() const {
  std::array<int, kNumGens> e{};
  for (int i = 0; i < kNumGens; ++i) e[i] = field(bits_, i) - kBias[i];
  return e;
}

int Monomial::degree() const {
  int d = -128;
  for (int i = 0; i < kNumGens; ++i) d += field(bits_, i);
  return d;
}

Monomial Monomial::operator*(Monomial o) const {
  std::uint64_t b = 0;
  for (int i = 0; i < kNumGens; ++i) {
    b |= pack_field(i, field(bits_, i) + field(o.bits_, i) - 2 * kBias[i]);
  }
  return Monomial(b);
}

Monomial Monomial::with_exp(Gen g, int e) const {
  const int i = static_cast<int>(g);
  const std::uint64_t mask = ~(std::uint64_t{0xff} << (8 * i));
  return Monomial((bits_ & mask) | pack_field(i, e));
}

std::string Monomial::str() const {
  std::string out;
  for (int i = 0; i < kNumGens; ++i) {
    const int e = field(bits_, i) - kBias[i];
    if (e == 0) continue;
    if (!out.empty()) out += '*';
    out += gen_name(static_cast<Gen>(i));
    if (e != 1) out += '^' + std::to_string(e);
  }
  return out.empty() ? "1" : out;
}

}  // namespace tsurf::sym
