#include "lagcat/clifford.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace lagcat {

namespace {

constexpr int kMaxDegree = 12;       // irreducible construction cap
constexpr int kMaxRegularDegree = 10;  // 2^d x 2^d matrices

DenseReal mat_j() {
  DenseReal m(2, 2);
  m << 0, -1, 1, 0;
  return m;
}
DenseReal mat_k() {
  DenseReal m(2, 2);
  m << 1, 0, 0, -1;
  return m;
}
DenseReal mat_s() {
  DenseReal m(2, 2);
  m << 0, 1, 1, 0;
  return m;
}

template <typename D1, typename D2>
typename D1::PlainObject kron(const Eigen::MatrixBase<D1>& a, const Eigen::MatrixBase<D2>& b) {
  typename D1::PlainObject out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Index i = 0; i < a.rows(); ++i)
    for (Index j = 0; j < a.cols(); ++j)
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  return out;
}

Dense pauli(int which) {
  Dense m(2, 2);
  switch (which) {
    case 1: m << 0, 1, 1, 0; break;
    case 2: m << 0, Complex(0, -1), Complex(0, 1), 0; break;
    default: m << 1, 0, 0, -1; break;
  }
  return m;
}

// Complex n x n matrix as a real 2n x 2n one, for z = x + iy stored as
// [x; y]: M = A + iB acts by [[A, -B], [B, A]].
DenseReal realify(const Dense& m) {
  const Index n = m.rows();
  DenseReal out(2 * n, 2 * n);
  out.topLeftCorner(n, n) = m.real();
  out.topRightCorner(n, n) = -m.imag();
  out.bottomLeftCorner(n, n) = m.imag();
  out.bottomRightCorner(n, n) = m.real();
  return out;
}

Index ungraded_real_dim(int k) {
  static const Index table[9] = {1, 2, 4, 4, 8, 8, 8, 8, 16};
  Index scale = 1;
  while (k > 8) {
    scale *= 16;
    k -= 8;
  }
  return scale * table[k];
}

// Anticommuting skew matrices squaring to -1 on R^N for the ungraded algebra
// of k generators; `which` selects between the two irreducible classes when
// k = 3 (mod 4) by flipping the top generator.
std::vector<DenseReal> ungraded_real(int k, int which) {
  require(k >= 0 && k + 1 <= kMaxDegree, Errc::unsupported_degree,
          "ungraded construction out of range");
  require(which == 0 || (which == 1 && k % 4 == 3), Errc::invalid_value,
          "no second ungraded class at this degree");
  std::vector<DenseReal> f;
  const DenseReal j2 = mat_j(), k2 = mat_k(), s2 = mat_s();
  const DenseReal i2 = DenseReal::Identity(2, 2);
  switch (k) {
    case 0:
      break;
    case 1:
      f = {j2};
      break;
    case 2:
      f = {kron(j2, k2), kron(j2, s2)};
      break;
    case 3:
      f = {kron(j2, k2), kron(j2, s2), kron(i2, j2)};
      break;
    case 4: {
      const auto base = ungraded_real(3, 0);
      for (const auto& g : base) f.push_back(kron(k2, g));
      f.push_back(kron(j2, DenseReal::Identity(4, 4)));
      break;
    }
    case 5:
    case 6:
    case 7: {
      const Dense factors[5] = {kron(pauli(1), pauli(1)), kron(pauli(1), pauli(2)),
                                kron(pauli(1), pauli(3)),
                                kron(pauli(2), Dense::Identity(2, 2)),
                                kron(pauli(3), Dense::Identity(2, 2))};
      for (const Dense& h : factors) f.push_back(realify(Complex(0, 1) * h));
      if (k >= 6) {
        // Antilinear commutant element z -> M conj(z) with M = sigma3 (x)
        // (i sigma2), real: realifies to diag(A, -A).
        const DenseReal a = kron(k2, (-j2).eval());
        DenseReal e6 = DenseReal::Zero(8, 8);
        e6.topLeftCorner(4, 4) = a;
        e6.bottomRightCorner(4, 4) = -a;
        f.push_back(e6);
      }
      if (k >= 7) {
        DenseReal top = DenseReal::Identity(8, 8);
        for (const auto& g : f) top = top * g;
        f.push_back(top);
      }
      f.resize(k);
      break;
    }
    case 8: {
      const auto base = ungraded_real(7, 0);
      for (const auto& g : base) f.push_back(kron(k2, g));
      f.push_back(kron(j2, DenseReal::Identity(8, 8)));
      break;
    }
    default: {  // k > 8: tensor with the period-8 block
      const auto low = ungraded_real(k - 8, which);
      which = 0;  // consumed by the low factor
      const auto high = ungraded_real(8, 0);
      DenseReal vol = DenseReal::Identity(16, 16);
      for (const auto& g : high) vol = vol * g;
      const DenseReal id_low = DenseReal::Identity(low.empty() ? 1 : low[0].rows(),
                                                   low.empty() ? 1 : low[0].rows());
      for (const auto& g : high) f.push_back(kron(id_low, g));
      for (const auto& g : low) f.push_back(kron(g, vol));
      break;
    }
  }
  if (which == 1) f.back() = -f.back();
  return f;
}

SuperSpace graded_real(int d, int which, const Tolerances& tol) {
  if (d == 0) {
    require(which == 0 || which == 1, Errc::invalid_value, "class selector out of range");
    return which == 0 ? SuperSpace(1, 0, Field::Real) : SuperSpace(0, 1, Field::Real);
  }
  const auto f = ungraded_real(d - 1, which);
  const Index n = ungraded_real_dim(d - 1);
  const DenseReal j2 = mat_j(), s2 = mat_s();
  const DenseReal id = DenseReal::Identity(n, n);
  std::vector<Matrix> gens;
  for (const auto& g : f) gens.push_back(Matrix::from_real(kron(s2, g)));
  gens.push_back(Matrix::from_real(kron(j2, id)));
  return SuperSpace(n, n, Field::Real, d, std::move(gens), tol);
}

SuperSpace graded_complex(int d, int which, const Tolerances& tol) {
  if (d == 0) {
    require(which == 0 || which == 1, Errc::invalid_value, "class selector out of range");
    return which == 0 ? SuperSpace(1, 0, Field::Complex) : SuperSpace(0, 1, Field::Complex);
  }
  const int m = (d + 1) / 2;
  const Index n = Index(1) << m;
  auto chain = [&](int slot, int p) {  // sigma_p at `slot`, sigma3 before, I after
    Dense out = Dense::Identity(1, 1);
    for (int t = 0; t < m; ++t) {
      const Dense factor = t < slot ? pauli(3) : (t == slot ? pauli(p) : Dense::Identity(2, 2));
      out = kron(out, factor);
    }
    return out;
  };
  std::vector<Dense> raw;
  for (int j = 1; j <= d; ++j) {
    const int slot = (j - 1) / 2;
    raw.push_back(Complex(0, 1) * chain(slot, j % 2 == 1 ? 1 : 2));
  }
  Dense gamma_raw = Dense::Identity(1, 1);
  for (int t = 0; t < m; ++t) gamma_raw = kron(gamma_raw, pauli(3));
  // Permute the basis so the +1 eigenvectors of the grading come first.
  std::vector<Index> order;
  for (Index i = 0; i < n; ++i)
    if (gamma_raw(i, i).real() > 0) order.push_back(i);
  const Index p = static_cast<Index>(order.size());
  for (Index i = 0; i < n; ++i)
    if (gamma_raw(i, i).real() < 0) order.push_back(i);
  Dense perm = Dense::Zero(n, n);
  for (Index c = 0; c < n; ++c) perm(order[c], c) = 1.0;
  std::vector<Matrix> gens;
  for (const Dense& e : raw) gens.push_back(Matrix::from_complex(perm.adjoint() * e * perm));
  if (which == 1) gens.back() = -gens.back();
  return SuperSpace(p, n - p, Field::Complex, d, std::move(gens), tol);
}

}  // namespace

int irrep_count(int d, Field f) {
  require(d >= 0, Errc::unsupported_degree, "negative degree");
  if (f == Field::Complex) return d % 2 == 0 ? 2 : 1;
  return (d % 8 == 0 || d % 8 == 4) ? 2 : 1;
}

Index irrep_dim(int d, Field f) {
  require(d >= 0, Errc::unsupported_degree, "negative degree");
  if (f == Field::Complex) return Index(1) << ((d + 1) / 2);
  return d == 0 ? 1 : 2 * ungraded_real_dim(d - 1);
}

SuperSpace irreducible_module(int d, Field f, int which) {
  require(d >= 0 && d <= kMaxDegree, Errc::unsupported_degree,
          "irreducible construction supports degrees 0.." + std::to_string(kMaxDegree));
  require(which >= 0 && which < irrep_count(d, f), Errc::invalid_value,
          "class selector out of range");
  const Tolerances tol{};
  return f == Field::Real ? graded_real(d, which, tol) : graded_complex(d, which, tol);
}

SuperSpace regular_module(int d, Field f) {
  require(d >= 0 && d <= kMaxRegularDegree, Errc::unsupported_degree,
          "regular module supports degrees 0.." + std::to_string(kMaxRegularDegree));
  if (d == 0) return SuperSpace(1, 0, f);
  const Index n = Index(1) << d;
  // Basis monomials by subset mask, reordered even-parity-first.
  std::vector<Index> pos(n);
  {
    Index next = 0;
    for (Index mask = 0; mask < n; ++mask)
      if (__builtin_popcountll(mask) % 2 == 0) pos[mask] = next++;
    for (Index mask = 0; mask < n; ++mask)
      if (__builtin_popcountll(mask) % 2 == 1) pos[mask] = next++;
  }
  std::vector<Matrix> gens;
  for (int j = 0; j < d; ++j) {
    Dense e = Dense::Zero(n, n);
    for (Index mask = 0; mask < n; ++mask) {
      const Index below = mask & ((Index(1) << j) - 1);
      double sign = __builtin_popcountll(below) % 2 == 0 ? 1.0 : -1.0;
      if (mask & (Index(1) << j)) sign = -sign;  // e_j e_j = -1 contraction
      e(pos[mask ^ (Index(1) << j)], pos[mask]) = sign;
    }
    gens.push_back(Matrix(std::move(e), f));
  }
  return SuperSpace(n / 2, n / 2, f, d, std::move(gens));
}

namespace {

// Normalized grading-volume involution sigma = Gamma e_1 ... e_d; defined for
// the two-class degrees (where it separates the classes).
Matrix class_involution(const SuperSpace& m) {
  Matrix om = Matrix::identity(m.dim(), m.field());
  for (const Matrix& e : m.generators()) om = om * e;
  if (m.field() == Field::Complex) {
    const int k = (m.degree() * (m.degree() + 1) / 2) % 4;
    const Complex phases[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
    om = phases[k] * om;
  }
  return m.gamma() * om;
}

long rounded(double x, double max_err, const char* what) {
  const double r = std::llround(x);
  require(std::abs(x - r) <= max_err, Errc::not_a_module,
          std::string(what) + " is not integral (value " + std::to_string(x) + ")");
  return static_cast<long>(r);
}

}  // namespace

ModuleDecomposition decompose_module(const SuperSpace& module, const Tolerances& tol) {
  const int d = module.degree();
  const Field f = module.field();
  const Index a = irrep_dim(d, f);
  require(module.dim() % a == 0, Errc::not_a_module,
          "module dimension is not a multiple of the irreducible dimension");
  ModuleDecomposition dec;
  dec.degree = d;
  dec.field = f;
  dec.mult_total = static_cast<long>(module.dim() / a);
  if (irrep_count(d, f) == 1) {
    dec.mult = {dec.mult_total};
    return dec;
  }
  if (module.dim() == 0) {
    dec.mult = {0, 0};
    return dec;
  }
  const Matrix sigma = class_involution(module);
  const double scale = std::max(1.0, hs_norm(sigma));
  require(hs_norm(sigma * sigma - Matrix::identity(module.dim(), f)) <= tol.proj * scale,
          Errc::not_a_module, "class involution does not square to one");
  for (const Matrix& e : module.generators()) {
    require(hs_norm(sigma * e - e * sigma) <= tol.proj * scale, Errc::not_a_module,
            "class involution does not commute with the action");
  }
  const Complex tr = sigma.m.trace();
  require(std::abs(tr.imag()) <= tol.proj * scale, Errc::not_a_module,
          "class involution has non-real trace");

  const SuperSpace standard = irreducible_module(d, f, 0);
  const double cal = class_involution(standard).m.trace().real() / static_cast<double>(a);
  const long sign = rounded(cal, 1e-6, "involution calibration");
  require(sign == 1 || sign == -1, Errc::not_a_module, "involution calibration is not +-1");

  const long diff = rounded(tr.real() / (static_cast<double>(sign) * static_cast<double>(a)),
                            1e-6, "class multiplicity difference");
  require((dec.mult_total + diff) % 2 == 0 && std::abs(diff) <= dec.mult_total,
          Errc::not_a_module, "class multiplicities are not nonnegative integers");
  dec.mult = {(dec.mult_total + diff) / 2, (dec.mult_total - diff) / 2};
  return dec;
}

const char* to_string(IndexGroup g) {
  switch (g) {
    case IndexGroup::Z: return "Z";
    case IndexGroup::Z2: return "Z/2";
    case IndexGroup::Zero: return "0";
  }
  return "?";
}

IndexGroup index_group(int d, Field f) {
  require(d >= 0, Errc::unsupported_degree, "negative degree");
  if (f == Field::Complex) return d % 2 == 0 ? IndexGroup::Z : IndexGroup::Zero;
  switch (d % 8) {
    case 0:
    case 4: return IndexGroup::Z;
    case 1:
    case 2: return IndexGroup::Z2;
    default: return IndexGroup::Zero;
  }
}

IndexClass index_class_of(const ModuleDecomposition& dec) {
  IndexClass c;
  c.degree = dec.degree;
  c.field = dec.field;
  c.group = index_group(dec.degree, dec.field);
  switch (c.group) {
    case IndexGroup::Z: c.value = dec.mult[0] - dec.mult[1]; break;
    case IndexGroup::Z2: c.value = dec.mult_total % 2; break;
    case IndexGroup::Zero: c.value = 0; break;
  }
  return c;
}

IndexClass add(const IndexClass& a, const IndexClass& b) {
  require(a.degree == b.degree && a.field == b.field, Errc::space_mismatch,
          "index classes live in different coefficient groups");
  IndexClass c = a;
  switch (a.group) {
    case IndexGroup::Z: c.value = a.value + b.value; break;
    case IndexGroup::Z2: c.value = (a.value + b.value) % 2; break;
    case IndexGroup::Zero: c.value = 0; break;
  }
  return c;
}

SuperSpace defect_module(const SuperSpace& v, const Frame& l, const Tolerances& tol) {
  const double iso = isotropy_residual(v, l);
  require(iso <= tol.proj, Errc::not_isotropic,
          "subspace is not B-isotropic (residual " + std::to_string(iso) + ")");
  double res_inv = 0.0;
  if (!v.generators().empty()) {
    res_inv = invariance_residual(v, l);
    require(res_inv <= tol.proj, Errc::not_invariant,
            "subspace is not invariant under the generators (residual " +
                std::to_string(res_inv) + ")");
  }
  const Frame d = defect_space(v, l, tol);
  // Split the defect along the grading: diagonalize the compression of Gamma.
  const EighResult eg = eigh(b_gram(v, d.cols()));
  Index minus = 0;
  for (Index i = 0; i < eg.values.size(); ++i) {
    require(std::abs(std::abs(eg.values[i]) - 1.0) <= 1e-6, Errc::not_invariant,
            "defect space is not split by the grading");
    if (eg.values[i] < 0) ++minus;
  }
  // eigh sorts ascending: reverse so the +1 eigenvectors come first.
  Dense rev(eg.vectors.rows(), eg.vectors.cols());
  for (Index c = 0; c < eg.vectors.cols(); ++c)
    rev.col(c) = eg.vectors.m.col(eg.vectors.cols() - 1 - c);
  const Matrix basis = d.cols() * Matrix(std::move(rev), d.field());
  std::vector<Matrix> gens;
  for (const Matrix& e : v.generators()) gens.push_back(basis.adjoint() * e * basis);
  Tolerances module_tol = tol;
  module_tol.ortho = std::max(tol.ortho, 100.0 * res_inv + 1e-12);
  return SuperSpace(d.dim() - minus, minus, v.field(), v.degree(), std::move(gens),
                    module_tol);
}

IndexClass sub_lagrangian_index(const SuperSpace& v, const Frame& l, const Tolerances& tol) {
  return index_class_of(decompose_module(defect_module(v, l, tol), tol));
}

}  // namespace lagcat
