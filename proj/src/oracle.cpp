#include "tvd/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>
#include <utility>

#include "tvd/wigner.hpp"  // near_degenerate_factor only

namespace tvd::oracle {

namespace {

// Minimal row-major complex matrix; everything below is written with
// explicit loops so it shares no arithmetic path with Eigen.
struct Dense {
  std::size_t n = 0;
  std::vector<Complex> a;

  explicit Dense(std::size_t dim = 0) : n(dim), a(dim * dim) {}
  Complex& operator()(std::size_t r, std::size_t c) { return a[r * n + c]; }
  Complex operator()(std::size_t r, std::size_t c) const { return a[r * n + c]; }
};

using Vec = std::vector<Complex>;

Dense from_eigen(const ComplexMatrix& m) {
  Dense d(static_cast<std::size_t>(m.rows()));
  for (std::size_t r = 0; r < d.n; ++r) {
    for (std::size_t c = 0; c < d.n; ++c) d(r, c) = m(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c));
  }
  return d;
}

Vec from_eigen(const StateVector& v) {
  Vec out(static_cast<std::size_t>(v.size()));
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = v(static_cast<Eigen::Index>(i));
  return out;
}

Dense eye(std::size_t n) {
  Dense d(n);
  for (std::size_t i = 0; i < n; ++i) d(i, i) = 1.0;
  return d;
}

Dense mul(const Dense& x, const Dense& y) {
  Dense out(x.n);
  for (std::size_t r = 0; r < x.n; ++r) {
    for (std::size_t k = 0; k < x.n; ++k) {
      const Complex xr = x(r, k);
      for (std::size_t c = 0; c < x.n; ++c) out(r, c) += xr * y(k, c);
    }
  }
  return out;
}

Dense adjoint(const Dense& x) {
  Dense out(x.n);
  for (std::size_t r = 0; r < x.n; ++r) {
    for (std::size_t c = 0; c < x.n; ++c) out(r, c) = std::conj(x(c, r));
  }
  return out;
}

Dense conj(const Dense& x) {
  Dense out(x.n);
  for (std::size_t i = 0; i < x.a.size(); ++i) out.a[i] = std::conj(x.a[i]);
  return out;
}

Dense lincomb(const Dense& x, Complex alpha, const Dense& y, Complex beta) {
  Dense out(x.n);
  for (std::size_t i = 0; i < x.a.size(); ++i) out.a[i] = alpha * x.a[i] + beta * y.a[i];
  return out;
}

double frob(const Dense& x) {
  double sum = 0.0;
  for (const auto& z : x.a) sum += std::norm(z);
  return std::sqrt(sum);
}

Vec matvec(const Dense& m, const Vec& v) {
  Vec out(m.n);
  for (std::size_t r = 0; r < m.n; ++r) {
    for (std::size_t c = 0; c < m.n; ++c) out[r] += m(r, c) * v[c];
  }
  return out;
}

Complex dot(const Vec& x, const Vec& y) {
  Complex s = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) s += std::conj(x[i]) * y[i];
  return s;
}

double norm(const Vec& v) { return std::sqrt(std::real(dot(v, v))); }

Vec sub(const Vec& x, const Vec& y, double sign = 1.0) {
  Vec out(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) out[i] = x[i] - sign * y[i];
  return out;
}

// A transform as (unitary part, antilinear flag).
struct Sym {
  Dense u;
  bool anti = false;
};

Vec act(const Sym& g, const Vec& v) {
  if (!g.anti) return matvec(g.u, v);
  Vec c(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) c[i] = std::conj(v[i]);
  return matvec(g.u, c);
}

Dense act_on(const Sym& g, const Dense& a) {
  return mul(mul(g.u, g.anti ? conj(a) : a), adjoint(g.u));
}

Sym inverse(const Sym& g) { return {g.anti ? conj(adjoint(g.u)) : adjoint(g.u), g.anti}; }

Sym then(const Sym& g, const Sym& h) {  // g∘h
  return {mul(g.u, g.anti ? conj(h.u) : h.u), g.anti != h.anti};
}

double commutant_margin(const Sym& g, const Dense& a) {
  return frob(lincomb(act_on(g, a), 1.0, a, -1.0)) / std::max(1.0, frob(a));
}

// e^{scale·A} by Taylor series after scaling the 1-norm below 1/4.
Dense expm(const Dense& a, Complex scale) {
  Dense x = lincomb(a, scale, a, 0.0);
  double norm1 = 0.0;
  for (std::size_t c = 0; c < x.n; ++c) {
    double col = 0.0;
    for (std::size_t r = 0; r < x.n; ++r) col += std::abs(x(r, c));
    norm1 = std::max(norm1, col);
  }
  int squarings = 0;
  while (norm1 > 0.25) {
    norm1 /= 2.0;
    ++squarings;
  }
  const double shrink = std::ldexp(1.0, -squarings);
  for (auto& z : x.a) z *= shrink;
  Dense sum = eye(x.n);
  Dense term = eye(x.n);
  for (int k = 1; k <= 30; ++k) {
    term = mul(term, x);
    for (auto& z : term.a) z /= static_cast<double>(k);
    sum = lincomb(sum, 1.0, term, 1.0);
  }
  for (int k = 0; k < squarings; ++k) sum = mul(sum, sum);
  return sum;
}

struct RealEigen {
  std::vector<double> values;               // ascending
  std::vector<std::vector<double>> vectors;  // vectors[k] pairs with values[k]
};

// Cyclic Jacobi rotations on a real symmetric matrix.
RealEigen jacobi(std::vector<std::vector<double>> a) {
  const std::size_t m = a.size();
  std::vector<std::vector<double>> v(m, std::vector<double>(m, 0.0));
  for (std::size_t i = 0; i < m; ++i) v[i][i] = 1.0;
  for (int sweep = 0; sweep < 100; ++sweep) {
    double off = 0.0;
    double total = 0.0;
    for (std::size_t p = 0; p < m; ++p) {
      for (std::size_t q = 0; q < m; ++q) {
        total += a[p][q] * a[p][q];
        if (p != q) off += a[p][q] * a[p][q];
      }
    }
    if (off <= 1e-30 * std::max(total, 1e-300)) break;
    for (std::size_t p = 0; p + 1 < m; ++p) {
      for (std::size_t q = p + 1; q < m; ++q) {
        if (a[p][q] == 0.0) continue;
        const double theta = (a[q][q] - a[p][p]) / (2.0 * a[p][q]);
        const double t = (theta >= 0.0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;
        for (std::size_t k = 0; k < m; ++k) {
          const double akp = a[k][p];
          const double akq = a[k][q];
          a[k][p] = c * akp - s * akq;
          a[k][q] = s * akp + c * akq;
        }
        for (std::size_t k = 0; k < m; ++k) {
          const double apk = a[p][k];
          const double aqk = a[q][k];
          a[p][k] = c * apk - s * aqk;
          a[q][k] = s * apk + c * aqk;
        }
        for (std::size_t k = 0; k < m; ++k) {
          const double vkp = v[k][p];
          const double vkq = v[k][q];
          v[k][p] = c * vkp - s * vkq;
          v[k][q] = s * vkp + c * vkq;
        }
      }
    }
  }
  std::vector<std::size_t> order(m);
  for (std::size_t i = 0; i < m; ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) { return a[x][x] < a[y][y]; });
  RealEigen out;
  for (auto k : order) {
    out.values.push_back(a[k][k]);
    std::vector<double> col(m);
    for (std::size_t r = 0; r < m; ++r) col[r] = v[r][k];
    out.vectors.push_back(std::move(col));
  }
  return out;
}

// Hermitian H = A + iB has the real symmetric embedding [[A, −B], [B, A]],
// whose spectrum is H's with every eigenvalue doubled. Each pair's real
// eigenvector (x; y) gives the complex eigenvector x + iy.
struct HermEigen {
  std::vector<double> values;
  std::vector<Vec> vectors;
};

HermEigen herm_eigen(const Dense& h) {
  const std::size_t n = h.n;
  std::vector<std::vector<double>> m(2 * n, std::vector<double>(2 * n, 0.0));
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) {
      // Average with the mirrored entry so the embedding is exactly symmetric.
      const Complex z = (h(r, c) + std::conj(h(c, r))) / 2.0;
      m[r][c] = z.real();
      m[r + n][c + n] = z.real();
      m[r][c + n] = -z.imag();
      m[r + n][c] = z.imag();
    }
  }
  const RealEigen e = jacobi(std::move(m));
  HermEigen out;
  for (std::size_t k = 0; k < n; ++k) {
    out.values.push_back(e.values[2 * k]);
    Vec psi(n);
    for (std::size_t i = 0; i < n; ++i) psi[i] = Complex(e.vectors[2 * k][i], e.vectors[2 * k][i + n]);
    const double nn = norm(psi);
    for (auto& z : psi) z /= nn;
    out.vectors.push_back(std::move(psi));
  }
  return out;
}

std::vector<std::vector<std::size_t>> clusters(const std::vector<double>& values, double gap_scale) {
  std::vector<std::vector<std::size_t>> out;
  for (std::size_t k = 0; k < values.size(); ++k) {
    if (k == 0 || values[k] - values[k - 1] > gap_scale) out.emplace_back();
    out.back().push_back(k);
  }
  return out;
}

// Mirrors the tolerance band rules of the detectors.
enum class Band { Zero, Mid, Positive };
Band band(double v, const Tolerances& tol) {
  if (v <= tol.tau_zero) return Band::Zero;
  if (v <= tol.tau_violation) return Band::Mid;
  return Band::Positive;
}

struct Prediction {
  std::string outcome;
  double truth = 0.0;  // law-level margin
  std::string note;
};

Sym sym_of(const io::Scenario& s, const io::Request& r, const std::string& role) {
  const io::SymmetryDecl* d = s.find_symmetry(r.refs.at(role));
  return {from_eigen(d->unitary_part), d->antilinear};
}

Vec state_of(const io::Scenario& s, const io::Request& r, const std::string& role) {
  return from_eigen(s.states.at(r.refs.at(role)));
}

Dense matrix_of(const io::Scenario& s, const std::string& name) { return from_eigen(s.matrices.at(name)); }

Prediction predict_unitary_curie(const io::Scenario& s, const io::Request& r, const Tolerances& tol) {
  const Dense h = matrix_of(s, "hamiltonian");
  const Sym g = sym_of(s, r, "symmetry");
  const Vec psi_i = state_of(s, r, "state");
  const Vec psi_f = matvec(expm(h, Complex(0.0, -r.params.at("t"))), psi_i);
  const Band bi = band(norm(sub(act(g, psi_i), psi_i)), tol);
  const Band bf = band(norm(sub(act(g, psi_f), psi_f)), tol);
  const bool fires = (bi == Band::Zero && bf == Band::Positive) || (bf == Band::Zero && bi == Band::Positive);
  return {fires ? "Violation" : "NoConclusion", commutant_margin(g, h), "commutant [R,H]"};
}

Prediction predict_scattering_curie(const io::Scenario& s, const io::Request& r, const Tolerances& tol) {
  const Dense smat = matrix_of(s, "smatrix");
  const Sym g = sym_of(s, r, "symmetry");
  const Vec in = state_of(s, r, "state_in");
  const Vec out = state_of(s, r, "state_out");
  const Vec g_in = act(g, in);
  const Vec g_out = act(g, out);
  auto zero = [&](const Vec& v) { return norm(v) <= tol.tau_zero; };
  const bool premise = (zero(sub(g_in, in)) && zero(sub(g_out, out, -1.0))) ||
                       (zero(sub(g_out, out)) && zero(sub(g_in, in, -1.0)));
  const double amp = std::abs(dot(out, matvec(smat, in)));
  const bool fires = premise && band(amp, tol) == Band::Positive;
  return {fires ? "Violation" : "NoConclusion", commutant_margin(g, smat), "commutant [R,S]"};
}

Dense s_matrix_for(const io::Scenario& s, const io::Request& r) {
  if (!r.params.count("ti")) return matrix_of(s, "smatrix");
  const Dense h0 = matrix_of(s, "h0");
  const Dense h = lincomb(h0, 1.0, matrix_of(s, "v"), 1.0);
  const double ti = r.params.at("ti");
  const double tf = r.params.at("tf");
  return mul(mul(expm(h0, Complex(0.0, tf)), expm(h, Complex(0.0, -(tf - ti)))), expm(h0, Complex(0.0, -ti)));
}

Prediction predict_s_matrix_inference(const io::Scenario& s, const io::Request& r, const Tolerances& tol) {
  const Sym g = sym_of(s, r, "symmetry");
  const Dense h0 = matrix_of(s, "h0");
  const double h0_margin = commutant_margin(g, h0);
  const double s_margin = commutant_margin(g, s_matrix_for(s, r));
  const bool fires = h0_margin <= tol.tau_zero && band(s_margin, tol) == Band::Positive;
  if (s.matrices.count("v")) {
    return {fires ? "Violation" : "NoConclusion", commutant_margin(g, lincomb(h0, 1.0, matrix_of(s, "v"), 1.0)),
            "commutant [R,H0+V]"};
  }
  return {fires ? "Violation" : "NoConclusion", s_margin, "commutant [R,S] (no V declared)"};
}

Prediction predict_cpt_link(const io::Scenario& s, const io::Request& r, const Tolerances& tol) {
  const Dense h = matrix_of(s, "hamiltonian");
  const Sym cpt = sym_of(s, r, "cpt");
  const Sym cp = sym_of(s, r, "cp");
  const bool fires = commutant_margin(cpt, h) <= tol.tau_zero && band(commutant_margin(cp, h), tol) == Band::Positive;
  const Sym t = then(inverse(cp), cpt);
  return {fires ? "Violation" : "NoConclusion", commutant_margin(t, h), "commutant [T,H] with T = CP^-1 CPT"};
}

Prediction predict_kabir(const io::Scenario& s, const io::Request& r, const Tolerances& tol) {
  const Dense smat = r.params.count("t") ? expm(matrix_of(s, "hamiltonian"), Complex(0.0, -r.params.at("t")))
                                          : matrix_of(s, "smatrix");
  const Sym t = sym_of(s, r, "symmetry");
  const Vec in = state_of(s, r, "state_in");
  const Vec out = state_of(s, r, "state_out");
  const Complex forward = dot(out, matvec(smat, in));
  const Complex reversed = dot(act(t, in), matvec(smat, act(t, out)));
  const bool fires = band(std::abs(forward - reversed), tol) == Band::Positive;
  const double truth = frob(lincomb(act_on(t, smat), 1.0, adjoint(smat), -1.0)) / std::max(1.0, frob(smat));
  return {fires ? "Violation" : "NoConclusion", truth, "T S T^-1 vs S^-1"};
}

double gap_tol_of(const io::Request& r, const Tolerances& tol) {
  auto it = r.params.find("gap_tol");
  return it == r.params.end() ? tol.gap_tol : it->second;
}

Prediction predict_wigner(const io::Scenario& s, const io::Request& r, const Tolerances& tol) {
  const Dense h = matrix_of(s, "hamiltonian");
  const Sym t = sym_of(s, r, "symmetry");
  const HermEigen e = herm_eigen(h);
  const double range = e.values.back() - e.values.front();
  const double gap_scale = gap_tol_of(r, tol) * std::max(1.0, range);
  bool fires = false;
  for (const auto& c : clusters(e.values, gap_scale)) {
    if (c.size() != 1) continue;
    const std::size_t k = c.front();
    double isolation = std::numeric_limits<double>::infinity();
    if (k > 0) isolation = std::min(isolation, e.values[k] - e.values[k - 1]);
    if (k + 1 < e.values.size()) isolation = std::min(isolation, e.values[k + 1] - e.values[k]);
    if (isolation <= wigner::near_degenerate_factor * gap_scale) continue;
    const double delta = 1.0 - std::abs(dot(act(t, e.vectors[k]), e.vectors[k]));
    if (band(delta, tol) == Band::Positive) fires = true;
  }
  return {fires ? "Violation" : "NoConclusion", commutant_margin(t, h), "commutant [T,H]"};
}

Prediction predict_kramers(const io::Scenario& s, const io::Request& r, const Tolerances& tol) {
  const Dense h = matrix_of(s, "hamiltonian");
  const Sym t = sym_of(s, r, "symmetry");
  const double margin = commutant_margin(t, h);
  const Dense sq = mul(t.u, t.anti ? conj(t.u) : t.u);
  const bool minus = frob(lincomb(sq, 1.0, eye(h.n), 1.0)) <= tol.tau_zero;
  if (!t.anti || !minus || margin > tol.tau_zero) return {"NotApplicable", margin, "premises T^2=-I, [T,H]=0"};
  const HermEigen e = herm_eigen(h);
  const double gap_scale = gap_tol_of(r, tol) * std::max(1.0, e.values.back() - e.values.front());
  for (const auto& c : clusters(e.values, gap_scale)) {
    if (c.size() % 2 != 0) return {"Fail", margin, "odd cluster from Jacobi spectrum"};
  }
  return {"Pass", margin, "all Jacobi clusters even"};
}

Prediction predict(const io::Scenario& s, const io::Request& r, const Tolerances& tol) {
  using io::Detector;
  switch (r.detector) {
    case Detector::UnitaryCurie: return predict_unitary_curie(s, r, tol);
    case Detector::ScatteringCurie: return predict_scattering_curie(s, r, tol);
    case Detector::SMatrixInference: return predict_s_matrix_inference(s, r, tol);
    case Detector::CptLink: return predict_cpt_link(s, r, tol);
    case Detector::Kabir: return predict_kabir(s, r, tol);
    case Detector::Wigner: return predict_wigner(s, r, tol);
    case Detector::Kramers: return predict_kramers(s, r, tol);
  }
  return {};
}

}  // namespace

std::vector<io::OracleCheck> cross_check(const io::Scenario& s, const io::Report& report) {
  const Tolerances& tol = report.provenance.tolerances;
  std::vector<io::OracleCheck> checks;
  for (std::size_t i = 0; i < s.requests.size(); ++i) {
    const io::Request& req = s.requests[i];
    const Prediction p = predict(s, req, tol);
    io::OracleCheck c;
    c.id = req.id;
    c.expected_outcome = p.outcome;
    c.truth_margin = p.truth;
    c.note = p.note;
    if (i >= report.records.size()) {
      c.agree = false;
      c.note = "missing record; " + p.note;
    } else {
      const io::Record& rec = report.records[i];
      const bool outcome_matches = rec.outcome == p.outcome && rec.id == req.id;
      const bool law_backed = rec.outcome != "Violation" || p.truth > tol.tau_zero;
      c.agree = outcome_matches && law_backed;
      if (!law_backed) c.note = "violation reported but law-level margin is zero; " + p.note;
    }
    checks.push_back(std::move(c));
  }
  if (report.records.size() > s.requests.size()) {
    checks.push_back({"<extra>", false, "", 0.0, "report has more records than the scenario has requests"});
  }
  return checks;
}

}  // namespace tvd::oracle
