#include "quiverlab/ktheory.hpp"

#include <sstream>
#include <stdexcept>
#include <utility>

namespace quiverlab {

namespace {

bool is_diagonal_chain(const IntMatrix& d) {
  std::size_t k = std::min(d.rows(), d.cols());
  for (std::size_t i = 0; i < d.rows(); ++i)
    for (std::size_t j = 0; j < d.cols(); ++j)
      if (i != j && d.at(i, j) != 0) return false;
  for (std::size_t i = 0; i < k; ++i) {
    if (d.at(i, i) < 0) return false;
    if (i + 1 < k) {
      const mpz_class& a = d.at(i, i);
      const mpz_class& b = d.at(i + 1, i + 1);
      if (a == 0) {
        if (b != 0) return false;
      } else if (!mpz_divisible_p(b.get_mpz_t(), a.get_mpz_t())) {
        return false;
      }
    }
  }
  return true;
}

mpz_class det(const IntMatrix& m) {
  // fraction-free Gaussian elimination (Bareiss)
  std::size_t n = m.rows();
  if (n == 0) return 1;
  IntMatrix a = m;
  mpz_class prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a.at(k, k) == 0) {
      std::size_t p = k + 1;
      while (p < n && a.at(p, k) == 0) ++p;
      if (p == n) return 0;
      for (std::size_t j = 0; j < n; ++j) std::swap(a.at(k, j), a.at(p, j));
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j) {
        mpz_class t = a.at(i, j) * a.at(k, k) - a.at(i, k) * a.at(k, j);
        mpz_divexact(a.at(i, j).get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
      }
    prev = a.at(k, k);
  }
  return sign * a.at(n - 1, n - 1);
}

}  // namespace

SNFResult::SNFResult(IntMatrix u, IntMatrix d, IntMatrix v, const IntMatrix& a)
    : U(std::move(u)), D(std::move(d)), V(std::move(v)) {
  if (!(U * a * V == D)) throw std::logic_error("SNF: U*A*V != D");
  mpz_class du = det(U), dv = det(V);
  if (du != 1 && du != -1) throw std::logic_error("SNF: U not unimodular");
  if (dv != 1 && dv != -1) throw std::logic_error("SNF: V not unimodular");
  if (!is_diagonal_chain(D))
    throw std::logic_error("SNF: D not a divisibility chain");
}

std::size_t SNFResult::rank() const {
  std::size_t r = 0, k = std::min(D.rows(), D.cols());
  for (std::size_t i = 0; i < k; ++i)
    if (D.at(i, i) != 0) ++r;
  return r;
}

std::vector<mpz_class> SNFResult::diagonal() const {
  std::vector<mpz_class> out;
  std::size_t k = std::min(D.rows(), D.cols());
  for (std::size_t i = 0; i < k; ++i) out.push_back(D.at(i, i));
  return out;
}

SNFResult smith_normal_form(const IntMatrix& a) {
  std::size_t m = a.rows(), n = a.cols();
  IntMatrix d = a, u = IntMatrix::identity(m), v = IntMatrix::identity(n);

  auto swap_rows = [&](std::size_t i, std::size_t j) {
    for (std::size_t c = 0; c < n; ++c) std::swap(d.at(i, c), d.at(j, c));
    for (std::size_t c = 0; c < m; ++c) std::swap(u.at(i, c), u.at(j, c));
  };
  auto swap_cols = [&](std::size_t i, std::size_t j) {
    for (std::size_t r = 0; r < m; ++r) std::swap(d.at(r, i), d.at(r, j));
    for (std::size_t r = 0; r < n; ++r) std::swap(v.at(r, i), v.at(r, j));
  };
  auto add_row = [&](std::size_t dst, std::size_t src, const mpz_class& c) {
    for (std::size_t k = 0; k < n; ++k) d.at(dst, k) += c * d.at(src, k);
    for (std::size_t k = 0; k < m; ++k) u.at(dst, k) += c * u.at(src, k);
  };
  auto add_col = [&](std::size_t dst, std::size_t src, const mpz_class& c) {
    for (std::size_t k = 0; k < m; ++k) d.at(k, dst) += c * d.at(k, src);
    for (std::size_t k = 0; k < n; ++k) v.at(k, dst) += c * v.at(k, src);
  };
  auto negate_row = [&](std::size_t i) {
    for (std::size_t k = 0; k < n; ++k) d.at(i, k) = -d.at(i, k);
    for (std::size_t k = 0; k < m; ++k) u.at(i, k) = -u.at(i, k);
  };

  std::size_t t = 0;
  std::size_t lim = std::min(m, n);
  while (t < lim) {
    // pivot: smallest nonzero magnitude in the remaining block
    std::size_t pi = t, pj = t;
    bool found = false;
    mpz_class best;
    for (std::size_t i = t; i < m; ++i)
      for (std::size_t j = t; j < n; ++j)
        if (d.at(i, j) != 0) {
          mpz_class mag = abs(d.at(i, j));
          if (!found || mag < best) {
            best = mag;
            pi = i;
            pj = j;
            found = true;
          }
        }
    if (!found) break;
    if (pi != t) swap_rows(t, pi);
    if (pj != t) swap_cols(t, pj);
    if (d.at(t, t) < 0) negate_row(t);

    bool clean = true;
    for (std::size_t i = t + 1; i < m; ++i)
      if (d.at(i, t) != 0) {
        mpz_class q;
        mpz_fdiv_q(q.get_mpz_t(), d.at(i, t).get_mpz_t(),
                   d.at(t, t).get_mpz_t());
        add_row(i, t, -q);
        if (d.at(i, t) != 0) clean = false;
      }
    for (std::size_t j = t + 1; j < n; ++j)
      if (d.at(t, j) != 0) {
        mpz_class q;
        mpz_fdiv_q(q.get_mpz_t(), d.at(t, j).get_mpz_t(),
                   d.at(t, t).get_mpz_t());
        add_col(j, t, -q);
        if (d.at(t, j) != 0) clean = false;
      }
    if (!clean) continue;  // a remainder became the new, smaller pivot

    // enforce divisibility over the rest of the block
    bool divides = true;
    for (std::size_t i = t + 1; i < m && divides; ++i)
      for (std::size_t j = t + 1; j < n && divides; ++j)
        if (!mpz_divisible_p(d.at(i, j).get_mpz_t(),
                             d.at(t, t).get_mpz_t())) {
          add_row(t, i, 1);
          divides = false;
        }
    if (divides) ++t;
  }
  return SNFResult(std::move(u), std::move(d), std::move(v), a);
}

std::string K0Group::to_string() const {
  std::ostringstream os;
  bool first = true;
  if (freeRank == 1) {
    os << "Z";
    first = false;
  } else if (freeRank > 1) {
    os << "Z^" << freeRank;
    first = false;
  }
  for (const auto& t : torsion) {
    if (!first) os << " + ";
    os << "Z/" << t.get_str();
    first = false;
  }
  if (first) os << "0";
  return os.str();
}

K0Group k0_group(const Quiver& q) {
  std::size_t n = q.num_vertices();
  std::vector<std::size_t> regular;
  for (std::size_t v = 0; v < n; ++v)
    if (q.out_degree(v) > 0) regular.push_back(v);

  IntMatrix rel(regular.size(), n);
  for (std::size_t r = 0; r < regular.size(); ++r) {
    std::size_t v = regular[r];
    rel.at(r, v) += 1;
    for (std::size_t e : q.out_edges(v)) rel.at(r, q.edge_dst(e)) -= 1;
  }

  SNFResult snf = smith_normal_form(rel);
  K0Group g;
  g.freeRank = n - snf.rank();
  for (const auto& dgn : snf.diagonal())
    if (dgn > 1) g.torsion.push_back(dgn);
  return g;
}

std::vector<std::string> verify_shift_equivalence(
    const ShiftEquivalenceWitness& w) {
  std::vector<std::string> bad;
  if (w.A.rows() != w.A.cols()) bad.push_back("A is not square");
  if (w.B.rows() != w.B.cols()) bad.push_back("B is not square");
  if (w.lag < 1) bad.push_back("lag must be >= 1");
  if (w.R.rows() != w.A.rows() || w.R.cols() != w.B.rows())
    bad.push_back("R has wrong shape");
  if (w.S.rows() != w.B.rows() || w.S.cols() != w.A.rows())
    bad.push_back("S has wrong shape");
  if (!bad.empty()) return bad;

  if (!w.R.nonnegative()) bad.push_back("R has a negative entry");
  if (!w.S.nonnegative()) bad.push_back("S has a negative entry");
  if (!(w.A.pow(w.lag) == w.R * w.S)) bad.push_back("A^l != R*S");
  if (!(w.B.pow(w.lag) == w.S * w.R)) bad.push_back("B^l != S*R");
  if (!(w.A * w.R == w.R * w.B)) bad.push_back("A*R != R*B");
  if (!(w.S * w.A == w.B * w.S)) bad.push_back("S*A != B*S");
  return bad;
}

ShiftEquivalenceWitness lift_shift_equivalence(
    const ShiftEquivalenceWitness& w) {
  return {kronecker(w.A, w.A), kronecker(w.B, w.B), kronecker(w.R, w.R),
          kronecker(w.S, w.S), w.lag};
}

}  // namespace quiverlab
