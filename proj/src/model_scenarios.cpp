#include "tvd/model_scenarios.hpp"

#include <array>
#include <charconv>
#include <cmath>
#include <numbers>
#include <random>
#include <optional>
#include <set>

#include "tvd/errors.hpp"
#include "tvd/models.hpp"

namespace tvd::models {

namespace {

double parse_plain(std::string_view text, const std::string& original) {
  double v = 0.0;
  const char* end = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(text.data(), end, v);
  if (ec != std::errc{} || ptr != end || !std::isfinite(v)) {
    throw PremiseError("cannot parse number '" + original + "'");
  }
  return v;
}

void check_keys(const std::string& model, const ParamMap& params, const std::set<std::string>& allowed) {
  for (const auto& [key, _] : params) {
    if (!allowed.count(key)) throw PremiseError("model '" + model + "' has no parameter '" + key + "'");
  }
}

double real_or(const ParamMap& params, const std::string& key, double fallback) {
  auto it = params.find(key);
  return it == params.end() ? fallback : parse_real(it->second);
}

std::uint64_t seed_of(const std::string& text) {
  std::uint64_t v = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (ec != std::errc{} || ptr != text.data() + text.size()) {
    throw PremiseError("seed must be a nonnegative integer, got '" + text + "'");
  }
  return v;
}

std::array<double, 3> parse_axis(const std::string& text) {
  if (text == "x") return {1.0, 0.0, 0.0};
  if (text == "y") return {0.0, 1.0, 0.0};
  if (text == "z") return {0.0, 0.0, 1.0};
  std::array<double, 3> e{};
  std::size_t start = 0;
  for (int k = 0; k < 3; ++k) {
    const std::size_t comma = text.find(',', start);
    if ((k < 2) == (comma == std::string::npos)) {
      throw PremiseError("E must be x, y, z or three comma-separated numbers, got '" + text + "'");
    }
    e[static_cast<std::size_t>(k)] = parse_real(text.substr(start, comma - start));
    start = comma + 1;
  }
  return e;
}

io::SymmetryDecl decl(const SymmetryTransform& g) { return {g.label(), g.unitary_part(), g.antilinear()}; }

io::Request request(std::string id, io::Detector d, std::map<std::string, std::string> refs,
                    std::map<std::string, double> params = {}) {
  return {std::move(id), d, std::move(refs), std::move(params)};
}

io::Scenario kaon_decay(const ParamMap& params) {
  check_keys("kaon-decay", params, {"epsilon"});
  const double eps = real_or(params, "epsilon", 0.2);
  const KaonDecayModel m = kaon_decay_scattering_model(eps);
  io::Scenario s;
  s.dim = 2;
  s.description = "K_L -> pi pi toy: CP-odd K_L scattering into the CP-even two-pion state";
  s.matrices["smatrix"] = m.s;
  s.symmetries.push_back(decl(m.cp));
  s.states["K_L"] = m.psi_in;
  s.states["pipi"] = m.psi_out;
  s.requests.push_back(request("kl-to-pipi", io::Detector::ScatteringCurie,
                               {{"symmetry", "CP"}, {"state_in", "K_L"}, {"state_out", "pipi"}}));
  return s;
}

io::Scenario kaon_oscillation(const ParamMap& params) {
  check_keys("kaon-oscillation", params, {"m1", "m2", "w", "t", "seed"});
  double m1 = 1.0, m2 = 1.0, t = 1.0;
  Complex w(0.0, 1.0);
  std::optional<std::uint64_t> seed;
  if (auto it = params.find("seed"); it != params.end()) {
    seed = seed_of(it->second);
    std::mt19937_64 rng(*seed);
    std::uniform_real_distribution<double> mass(0.5, 1.5), mag(0.1, 1.0), phase(0.0, 2.0 * std::numbers::pi),
        time(0.2, 3.0);
    m1 = mass(rng);
    m2 = mass(rng);
    w = std::polar(mag(rng), phase(rng));
    t = time(rng);
  }
  m1 = real_or(params, "m1", m1);
  m2 = real_or(params, "m2", m2);
  t = real_or(params, "t", t);
  if (auto it = params.find("w"); it != params.end()) w = parse_complex(it->second);

  const KaonModel k = kaon_oscillation_model(m1, m2, w);
  io::Scenario s;
  s.dim = 2;
  s.description = "neutral kaon oscillation in the (K0, K0bar) basis with T = K";
  if (seed) s.seed = static_cast<std::int64_t>(*seed);
  s.matrices["hamiltonian"] = k.hamiltonian;
  s.symmetries.push_back(decl(k.t_conv));
  s.states["K0"] = k.k0();
  s.states["K0bar"] = k.k0bar();
  s.states["K1"] = k.k1();
  s.states["K2"] = k.k2();
  s.requests.push_back(request("k0-to-k0bar", io::Detector::Kabir,
                               {{"symmetry", "T"}, {"state_in", "K0"}, {"state_out", "K0bar"}}, {{"t", t}}));
  s.requests.push_back(request("k1-to-k2", io::Detector::Kabir,
                               {{"symmetry", "T"}, {"state_in", "K1"}, {"state_out", "K2"}}, {{"t", t}}));
  if (k.hamiltonian.norm() > 0.0) {
    s.requests.push_back(request("nondegenerate-levels", io::Detector::Wigner, {{"symmetry", "T"}}));
  }
  return s;
}

io::Scenario edm(const ParamMap& params) {
  check_keys("edm", params, {"j", "g", "h0", "d", "E"});
  const double j = real_or(params, "j", 0.5);
  const double g = real_or(params, "g", 1.0);
  const double h0 = real_or(params, "h0", 0.0);
  const double d = real_or(params, "d", 1.0);
  std::array<double, 3> e{0.0, 0.0, 1.0};
  if (auto it = params.find("E"); it != params.end()) e = parse_axis(it->second);

  const EdmModel m = edm_model(j, h0, g, e, d);
  if (m.hamiltonian.norm() == 0.0) throw PremiseError("edm: h0 = g = 0 gives the zero Hamiltonian");
  io::Scenario s;
  s.dim = m.spin.dim();
  s.description = "elementary electric dipole H = h0 + g J.E with T = exp(-i pi Jy) K";
  s.matrices["hamiltonian"] = m.hamiltonian;
  s.symmetries.push_back(decl(m.spin.t_conv));
  s.requests.push_back(request("nondegenerate-levels", io::Detector::Wigner, {{"symmetry", "T"}}));
  s.requests.push_back(request("kramers", io::Detector::Kramers, {{"symmetry", "T"}}));
  return s;
}

io::Scenario t_symmetric_s(const ParamMap& params) {
  check_keys("t-symmetric-s", params, {"dim", "seed"});
  const double dim_real = real_or(params, "dim", 3.0);
  if (dim_real < 1.0 || dim_real > 32.0 || dim_real != std::floor(dim_real)) {
    throw PremiseError("t-symmetric-s: dim must be an integer in [1, 32]");
  }
  const auto dim = static_cast<std::size_t>(dim_real);
  const std::uint64_t seed = params.count("seed") ? seed_of(params.at("seed")) : 1;

  io::Scenario s;
  s.dim = dim;
  s.description = "S = exp(-iG) with real symmetric G; invariant under T = K";
  s.seed = static_cast<std::int64_t>(seed);
  s.matrices["smatrix"] = t_symmetric_smatrix(dim, seed);
  s.symmetries.push_back(decl(SymmetryTransform::conjugation(dim, "T")));
  for (std::size_t i = 0; i < dim; ++i) s.states["e" + std::to_string(i + 1)] = linalg::basis_vector(dim, i);
  for (std::size_t i = 0; i < dim; ++i) {
    for (std::size_t k = 0; k < dim; ++k) {
      if (i == k) continue;
      const std::string in = "e" + std::to_string(i + 1);
      const std::string out = "e" + std::to_string(k + 1);
      s.requests.push_back(request(in + "-to-" + out, io::Detector::Kabir,
                                   {{"symmetry", "T"}, {"state_in", in}, {"state_out", out}}));
    }
  }
  return s;
}

}  // namespace

const std::vector<std::string>& scenario_names() {
  static const std::vector<std::string> names{"kaon-decay", "kaon-oscillation", "edm", "t-symmetric-s"};
  return names;
}

io::Scenario make_scenario(const std::string& name, const ParamMap& params) {
  if (name == "kaon-decay") return kaon_decay(params);
  if (name == "kaon-oscillation") return kaon_oscillation(params);
  if (name == "edm") return edm(params);
  if (name == "t-symmetric-s") return t_symmetric_s(params);
  throw PremiseError("unknown model '" + name + "'");
}

double parse_real(const std::string& text) {
  const auto slash = text.find('/');
  if (slash == std::string::npos) return parse_plain(text, text);
  const double num = parse_plain(std::string_view(text).substr(0, slash), text);
  const double den = parse_plain(std::string_view(text).substr(slash + 1), text);
  if (den == 0.0) throw PremiseError("division by zero in '" + text + "'");
  return num / den;
}

Complex parse_complex(const std::string& text) {
  if (text.empty()) throw PremiseError("empty complex number");
  if (text.back() != 'i') return {parse_real(text), 0.0};
  const std::string body = text.substr(0, text.size() - 1);
  // Split at the last sign that is not a leading sign or an exponent sign.
  std::size_t split = std::string::npos;
  for (std::size_t k = body.size(); k-- > 1;) {
    if ((body[k] == '+' || body[k] == '-') && body[k - 1] != 'e' && body[k - 1] != 'E') {
      split = k;
      break;
    }
  }
  const std::string re_part = split == std::string::npos ? "" : body.substr(0, split);
  std::string im_part = split == std::string::npos ? body : body.substr(split);
  double im = 0.0;
  if (im_part.empty() || im_part == "+") {
    im = 1.0;
  } else if (im_part == "-") {
    im = -1.0;
  } else {
    if (im_part.front() == '+') im_part.erase(0, 1);
    im = parse_real(im_part);
  }
  return {re_part.empty() ? 0.0 : parse_real(re_part), im};
}

}  // namespace tvd::models
