#pragma once
// Height pairings from fiber-contact data and the lattice side of splitting
// types. Matrices are exact rational, inverted by Gauss-Jordan elimination;
// fiber Gram blocks are validated negative definite through leading principal
// minors (sizes capped at 8).

#include <algorithm>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "mwtrisect/scalars.hpp"

namespace mwtrisect {

using Mat = std::vector<std::vector<Rat>>;

inline Rat mat_det(Mat m) {
  const std::size_t n = m.size();
  Rat det = 1;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && m[piv][col] == 0) ++piv;
    if (piv == n) return Rat(0);
    if (piv != col) {
      std::swap(m[piv], m[col]);
      det = -det;
    }
    det *= m[col][col];
    for (std::size_t r = col + 1; r < n; ++r) {
      if (m[r][col] == 0) continue;
      const Rat f = m[r][col] / m[col][col];
      for (std::size_t k = col; k < n; ++k) m[r][k] -= f * m[col][k];
    }
  }
  return det;
}

inline Mat mat_inverse(const Mat& a) {
  const std::size_t n = a.size();
  Mat m = a;
  Mat inv(n, std::vector<Rat>(n, Rat(0)));
  for (std::size_t i = 0; i < n; ++i) inv[i][i] = 1;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && m[piv][col] == 0) ++piv;
    if (piv == n) throw Error(errc::shape_mismatch, "matrix is singular");
    std::swap(m[piv], m[col]);
    std::swap(inv[piv], inv[col]);
    const Rat d = m[col][col];
    for (std::size_t k = 0; k < n; ++k) {
      m[col][k] /= d;
      inv[col][k] /= d;
    }
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || m[r][col] == 0) continue;
      const Rat f = m[r][col];
      for (std::size_t k = 0; k < n; ++k) {
        m[r][k] -= f * m[col][k];
        inv[r][k] -= f * inv[col][k];
      }
    }
  }
  return inv;
}

inline Mat leading_minor(const Mat& m, std::size_t k) {
  Mat out(k, std::vector<Rat>(k));
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) out[i][j] = m[i][j];
  return out;
}

inline void require_square(const Mat& m, const char* what) {
  if (m.empty()) throw Error(errc::shape_mismatch, std::string(what) + " is empty");
  for (const auto& row : m)
    if (row.size() != m.size())
      throw Error(errc::shape_mismatch, std::string(what) + " is not square");
}

// Symmetric, even integer diagonal, negative definite; rank capped at 8.
inline void validate_fiber_block(const Mat& a) {
  require_square(a, "fiber block");
  if (a.size() > 8) throw Error(errc::shape_mismatch, "fiber block larger than rank 8");
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (!rat_is_integer(a[i][i]) || boost::multiprecision::numerator(a[i][i]) % 2 != 0)
      throw Error(errc::invalid_config, "fiber block diagonal must be even integers");
    for (std::size_t j = 0; j < a.size(); ++j) {
      if (!rat_is_integer(a[i][j]))
        throw Error(errc::invalid_config, "fiber block entries must be integers");
      if (a[i][j] != a[j][i])
        throw Error(errc::invalid_config, "fiber block must be symmetric");
    }
  }
  for (std::size_t k = 1; k <= a.size(); ++k) {
    const Rat d = mat_det(leading_minor(a, k));
    const bool positive = d > 0;
    if ((k % 2 == 0) != positive || d == 0)
      throw Error(errc::invalid_config, "fiber block is not negative definite");
  }
}

inline void validate_positive_definite(const Mat& g, const char* what) {
  require_square(g, what);
  if (g.size() > 8) throw Error(errc::shape_mismatch, std::string(what) + " larger than rank 8");
  for (std::size_t i = 0; i < g.size(); ++i)
    for (std::size_t j = 0; j < g.size(); ++j)
      if (g[i][j] != g[j][i])
        throw Error(errc::invalid_config, std::string(what) + " must be symmetric");
  for (std::size_t k = 1; k <= g.size(); ++k)
    if (!(mat_det(leading_minor(g, k)) > 0))
      throw Error(errc::invalid_config, std::string(what) + " is not positive definite");
}

struct Fiber {
  std::string label;
  Mat block;  // intersection matrix of the non-identity components
};

struct FiberConfig {
  long long chi = 1;  // chi(O_S); 1 for a rational elliptic surface
  std::vector<Fiber> fibers;
};

inline void validate_fiber_config(const FiberConfig& cfg) {
  if (cfg.chi < 1) throw Error(errc::invalid_config, "chi must be a positive integer");
  for (const auto& f : cfg.fibers) validate_fiber_block(f.block);
}

struct DivisorData {
  long long d = 0;        // degree over the base (D . F)
  long long d_dot_o = 0;  // D . O
  std::vector<std::vector<long long>> contacts;  // one vector per fiber, aligned with cfg
  std::optional<long long> self_int;             // D . D when known
};

inline void require_contact_shape(const DivisorData& dd, const FiberConfig& cfg,
                                  const char* what) {
  if (dd.contacts.size() != cfg.fibers.size())
    throw Error(errc::shape_mismatch, std::string(what) + ": contact count != fiber count");
  for (std::size_t i = 0; i < cfg.fibers.size(); ++i)
    if (dd.contacts[i].size() != cfg.fibers[i].block.size())
      throw Error(errc::shape_mismatch,
                  std::string(what) + ": contact length != fiber rank at " + cfg.fibers[i].label);
}

// sum over fibers of c(v, D1)^T A_v^{-1} c(v, D2)
inline Rat contact_correction(const DivisorData& d1, const DivisorData& d2,
                              const FiberConfig& cfg) {
  require_contact_shape(d1, cfg, "first divisor");
  require_contact_shape(d2, cfg, "second divisor");
  Rat total = 0;
  for (std::size_t v = 0; v < cfg.fibers.size(); ++v) {
    const Mat inv = mat_inverse(cfg.fibers[v].block);
    const auto& c1 = d1.contacts[v];
    const auto& c2 = d2.contacts[v];
    for (std::size_t i = 0; i < c1.size(); ++i) {
      if (c1[i] == 0) continue;
      for (std::size_t j = 0; j < c2.size(); ++j) total += Rat(c1[i]) * inv[i][j] * Rat(c2[j]);
    }
  }
  return total;
}

// <P1, P2> = -(D1.D2 - d2 D1.O - d1 D2.O - d1 d2 chi - sum_v c1^T A_v^{-1} c2)
inline Rat pairing_from_geometry(const DivisorData& d1, const DivisorData& d2,
                                 const Rat& d1_dot_d2, const FiberConfig& cfg) {
  validate_fiber_config(cfg);
  const Rat corr = contact_correction(d1, d2, cfg);
  return -(d1_dot_d2 - Rat(d2.d) * d1.d_dot_o - Rat(d1.d) * d2.d_dot_o -
           Rat(d1.d) * Rat(d2.d) * cfg.chi - corr);
}

// The same identity solved for D1.D2.
inline Rat intersection_from_pairing(const DivisorData& d1, const DivisorData& d2,
                                     const Rat& pairing, const FiberConfig& cfg) {
  validate_fiber_config(cfg);
  const Rat corr = contact_correction(d1, d2, cfg);
  return -pairing + Rat(d2.d) * d1.d_dot_o + Rat(d1.d) * d2.d_dot_o +
         Rat(d1.d) * Rat(d2.d) * cfg.chi + corr;
}

struct MWVector {
  std::vector<Rat> coords;
  Mat gram;                 // positive definite Gram matrix of the free part
  std::string torsion_tag;  // affects contact bookkeeping only, never the pairing
};

inline Rat lattice_pairing(const MWVector& v1, const MWVector& v2) {
  if (v1.gram != v2.gram || v1.coords.size() != v2.coords.size() ||
      v1.coords.size() != v1.gram.size())
    throw Error(errc::basis_mismatch, "vectors come from different bases");
  validate_positive_definite(v1.gram, "Gram matrix");
  Rat total = 0;
  for (std::size_t i = 0; i < v1.coords.size(); ++i) {
    if (v1.coords[i] == 0) continue;
    for (std::size_t j = 0; j < v2.coords.size(); ++j)
      total += v1.coords[i] * v1.gram[i][j] * v2.coords[j];
  }
  return total;
}

// Height of a trisection cubic through r nodes of the branch quartic: (3 - r)/2.
inline Rat trisection_height(long long r) {
  if (r < 0 || r > 3) throw Error(errc::r_out_of_range, "node count must be in 0..3");
  return Rat(3 - r) / 2;
}

struct SplitType {
  long long m1 = 0, m2 = 0;  // m1 <= m2
  friend bool operator==(const SplitType& a, const SplitType& b) {
    return a.m1 == b.m1 && a.m2 == b.m2;
  }
};

inline MWVector negated(const MWVector& v) {
  MWVector r = v;
  for (auto& c : r.coords) c = -c;
  return r;
}

// Intersection numbers of the cubic with the two halves of the split curve,
// obtained from the lattice pairings; both must come out non-negative integers.
inline SplitType splitting_type(const MWVector& cubic_vec, const MWVector& other_vec,
                                const DivisorData& cubic, const DivisorData& other,
                                const FiberConfig& cfg) {
  const Rat p_plus = lattice_pairing(cubic_vec, other_vec);
  const Rat p_minus = lattice_pairing(cubic_vec, negated(other_vec));
  const Rat i_plus = intersection_from_pairing(cubic, other, p_plus, cfg);
  const Rat i_minus = intersection_from_pairing(cubic, other, p_minus, cfg);
  for (const Rat& v : {i_plus, i_minus})
    if (!rat_is_integer(v) || v < 0)
      throw Error(errc::non_integral_intersection,
                  "intersection " + rat_str(v) + " is not a non-negative integer");
  SplitType s;
  s.m1 = static_cast<long long>(boost::multiprecision::numerator(std::min(i_plus, i_minus)));
  s.m2 = static_cast<long long>(boost::multiprecision::numerator(std::max(i_plus, i_minus)));
  return s;
}

// For an I2-type fiber the contact numbers of a divisor and its involution
// image can only differ by an even amount.
inline bool i2_parity_check(long long c_d, long long c_sd) { return (c_d - c_sd) % 2 == 0; }

}  // namespace mwtrisect
