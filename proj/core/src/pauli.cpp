#include "qorder/pauli.hpp"

#include <bit>
#include <cctype>
#include <cmath>
#include <sstream>

#include "qorder/error.hpp"

namespace qorder {
namespace {

inline double parity_sign(std::uint64_t bits) noexcept {
  return (std::popcount(bits) & 1) ? -1.0 : 1.0;
}

// Index with a zero bit inserted at position `bit`.
inline std::uint64_t insert_zero(std::uint64_t k, int bit) noexcept {
  const std::uint64_t low = k & ((std::uint64_t{1} << bit) - 1);
  return ((k >> bit) << (bit + 1)) | low;
}

Pauli parse_pauli(char c) {
  switch (std::toupper(static_cast<unsigned char>(c))) {
    case 'X':
      return Pauli::X;
    case 'Y':
      return Pauli::Y;
    case 'Z':
      return Pauli::Z;
    default:
      throw OperatorError(std::string("unknown Pauli letter '") + c + "'");
  }
}

}  // namespace

char pauli_char(Pauli p) noexcept {
  switch (p) {
    case Pauli::X:
      return 'X';
    case Pauli::Y:
      return 'Y';
    case Pauli::Z:
      return 'Z';
  }
  return '?';
}

PauliString PauliString::parse(std::string_view label, cplx coefficient) {
  PauliString p(coefficient);
  std::size_t pos = 0;
  while (pos < label.size()) {
    const char c = label[pos];
    if (std::isspace(static_cast<unsigned char>(c)) || c == '*') {
      ++pos;
      continue;
    }
    const Pauli op = parse_pauli(c);
    ++pos;
    std::size_t start = pos;
    while (pos < label.size() && std::isdigit(static_cast<unsigned char>(label[pos]))) ++pos;
    if (start == pos) throw OperatorError("missing site index in Pauli label '" + std::string(label) + "'");
    p.set(std::stoi(std::string(label.substr(start, pos - start))), op);
  }
  return p;
}

PauliString PauliString::from_word(std::string_view word, int first_site, cplx coefficient) {
  PauliString p(coefficient);
  for (std::size_t k = 0; k < word.size(); ++k) {
    p.set(first_site + static_cast<int>(k), parse_pauli(word[k]));
  }
  return p;
}

PauliString& PauliString::set(int site, Pauli op) {
  if (site < 0 || site >= 64) throw OperatorError("site index " + std::to_string(site) + " out of range");
  const std::uint64_t bit = std::uint64_t{1} << site;
  if ((x_mask_ | z_mask_) & bit) {
    throw OperatorError("site " + std::to_string(site) + " appears twice in Pauli string");
  }
  if (op == Pauli::X || op == Pauli::Y) x_mask_ |= bit;
  if (op == Pauli::Z || op == Pauli::Y) z_mask_ |= bit;
  return *this;
}

std::optional<Pauli> PauliString::at(int site) const noexcept {
  if (site < 0 || site >= 64) return std::nullopt;
  const std::uint64_t bit = std::uint64_t{1} << site;
  const bool x = x_mask_ & bit;
  const bool z = z_mask_ & bit;
  if (x && z) return Pauli::Y;
  if (x) return Pauli::X;
  if (z) return Pauli::Z;
  return std::nullopt;
}

int PauliString::y_count() const noexcept { return std::popcount(x_mask_ & z_mask_); }

int PauliString::weight() const noexcept { return std::popcount(x_mask_ | z_mask_); }

std::vector<int> PauliString::sites() const {
  std::vector<int> out;
  std::uint64_t m = x_mask_ | z_mask_;
  while (m) {
    out.push_back(std::countr_zero(m));
    m &= m - 1;
  }
  return out;
}

int PauliString::max_site() const noexcept {
  const std::uint64_t m = x_mask_ | z_mask_;
  return m ? 63 - std::countl_zero(m) : -1;
}

bool PauliString::commutes_with(const PauliString& other) const noexcept {
  const int anti = std::popcount(x_mask_ & other.z_mask_) + std::popcount(z_mask_ & other.x_mask_);
  return (anti & 1) == 0;
}

cplx PauliString::phase() const noexcept {
  static constexpr cplx kPowers[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
  return coefficient_ * kPowers[y_count() & 3];
}

std::string PauliString::to_string() const {
  std::ostringstream os;
  if (coefficient_ != cplx{1.0, 0.0}) {
    if (coefficient_.imag() == 0.0) {
      os << coefficient_.real() << ' ';
    } else {
      os << '(' << coefficient_.real() << (coefficient_.imag() < 0 ? "-" : "+")
         << std::abs(coefficient_.imag()) << "i) ";
    }
  }
  bool first = true;
  for (int s : sites()) {
    if (!first) os << ' ';
    os << pauli_char(*at(s)) << s;
    first = false;
  }
  if (first) os << 'I';
  return os.str();
}

void check_sites(const PauliString& p, int n_qubits) {
  if (p.max_site() >= n_qubits) {
    throw OperatorError("Pauli string " + p.to_string() + " acts outside " + std::to_string(n_qubits) +
                        " qubits");
  }
}

void accumulate_pauli(const StateVector& in, const PauliString& p, cplx scale, StateVector& out) {
  if (in.dim() != out.dim()) throw SizeError("accumulate_pauli on states of different size");
  check_sites(p, in.n_qubits());
  const std::uint64_t x = p.x_mask();
  const std::uint64_t z = p.z_mask();
  const cplx factor = scale * p.phase();
  const auto src = in.amplitudes();
  auto dst = out.amplitudes();
  for (std::uint64_t b = 0; b < src.size(); ++b) {
    dst[b ^ x] += factor * parity_sign(b & z) * src[b];
  }
}

StateVector apply_pauli(const StateVector& state, const PauliString& p) {
  StateVector out(state.n_qubits());
  out.set_zero();
  accumulate_pauli(state, p, 1.0, out);
  return out;
}

void apply_pauli_rotation(StateVector& state, const PauliString& p, double angle) {
  if (!p.is_hermitian() || p.coefficient() != cplx{1.0, 0.0}) {
    throw OperatorError("rotation generator " + p.to_string() + " must be a Hermitian Pauli string with unit coefficient");
  }
  check_sites(p, state.n_qubits());
  const double c = std::cos(0.5 * angle);
  const double s = std::sin(0.5 * angle);
  const std::uint64_t x = p.x_mask();
  const std::uint64_t z = p.z_mask();
  auto a = state.amplitudes();

  if (x == 0) {
    // Diagonal generator: exp(-i angle/2 * (+-1)).
    const cplx plus{c, -s};
    const cplx minus{c, s};
    for (std::uint64_t b = 0; b < a.size(); ++b) {
      a[b] *= (std::popcount(b & z) & 1) ? minus : plus;
    }
    return;
  }

  const cplx mis = cplx{0.0, -s} * p.phase();
  const int pivot = std::countr_zero(x);
  const std::uint64_t half = a.size() >> 1;
  for (std::uint64_t k = 0; k < half; ++k) {
    const std::uint64_t b0 = insert_zero(k, pivot);
    const std::uint64_t b1 = b0 ^ x;
    const cplx a0 = a[b0];
    const cplx a1 = a[b1];
    a[b0] = c * a0 + mis * parity_sign(b1 & z) * a1;
    a[b1] = c * a1 + mis * parity_sign(b0 & z) * a0;
  }
}

void apply_controlled_z(StateVector& state, int site_a, int site_b) {
  const int n = state.n_qubits();
  if (site_a == site_b) throw OperatorError("controlled-Z needs two distinct sites");
  if (site_a < 0 || site_b < 0 || site_a >= n || site_b >= n) {
    throw OperatorError("controlled-Z sites out of range");
  }
  const std::uint64_t mask = (std::uint64_t{1} << site_a) | (std::uint64_t{1} << site_b);
  auto a = state.amplitudes();
  for (std::uint64_t b = 0; b < a.size(); ++b) {
    if ((b & mask) == mask) a[b] = -a[b];
  }
}

cplx pauli_matrix_element(const StateVector& bra, const PauliString& p, const StateVector& ket) {
  if (bra.dim() != ket.dim()) throw SizeError("matrix element between states of different size");
  check_sites(p, ket.n_qubits());
  const std::uint64_t x = p.x_mask();
  const std::uint64_t z = p.z_mask();
  const auto l = bra.amplitudes();
  const auto r = ket.amplitudes();
  cplx acc = 0.0;
  for (std::uint64_t b = 0; b < r.size(); ++b) {
    acc += parity_sign(b & z) * std::conj(l[b ^ x]) * r[b];
  }
  return p.phase() * acc;
}

double pauli_expectation(const StateVector& state, const PauliString& p) {
  if (!p.is_hermitian()) throw OperatorError("expectation of non-Hermitian " + p.to_string());
  return pauli_matrix_element(state, p, state).real();
}

}  // namespace qorder
