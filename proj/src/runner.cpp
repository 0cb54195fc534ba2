#include "tvd/runner.hpp"

#include <atomic>
#include <exception>
#include <sstream>
#include <thread>

#include "tvd/curie.hpp"
#include "tvd/kabir.hpp"
#include "tvd/models.hpp"
#include "tvd/symmetry.hpp"
#include "tvd/wigner.hpp"

namespace tvd {

namespace {

SymmetryTransform transform_of(const io::Scenario& s, const io::Request& r, const std::string& role,
                               const Tolerances& tol) {
  const io::SymmetryDecl* decl = s.find_symmetry(r.refs.at(role));
  return SymmetryTransform(decl->unitary_part, decl->antilinear, decl->label, tol.tau_zero);
}

const StateVector& state_of(const io::Scenario& s, const io::Request& r, const std::string& role) {
  return s.states.at(r.refs.at(role));
}

const ComplexMatrix& matrix_of(const io::Scenario& s, const std::string& name) { return s.matrices.at(name); }

double param_or(const io::Request& r, const std::string& key, double fallback) {
  auto it = r.params.find(key);
  return it == r.params.end() ? fallback : it->second;
}

std::string join(const std::vector<std::size_t>& xs) {
  std::ostringstream out;
  for (std::size_t i = 0; i < xs.size(); ++i) out << (i ? "," : "") << xs[i];
  return out.str();
}

io::Record kramers_record(const std::string& id, const wigner::KramersReport& k) {
  io::Record rec;
  rec.id = id;
  rec.detector = std::string(io::to_string(io::Detector::Kramers));
  rec.outcome = std::string(wigner::to_string(k.status));
  rec.margin = k.invariance;
  rec.reason = "none";
  rec.detail = k.detail;
  rec.witness["t_square"] = std::string(wigner::to_string(k.t_square.classification));
  rec.witness["t_square_deviation"] = k.t_square.deviation;
  rec.witness["multiplicities"] = join(k.multiplicities);
  if (k.offending_cluster) rec.witness["offending_cluster"] = static_cast<double>(*k.offending_cluster);
  return rec;
}

io::Record dispatch(const io::Scenario& s, const io::Request& r, const Tolerances& tol) {
  using io::Detector;
  switch (r.detector) {
    case Detector::UnitaryCurie: {
      const auto v = curie::unitary_curie_check(matrix_of(s, "hamiltonian"), transform_of(s, r, "symmetry", tol),
                                                state_of(s, r, "state"), r.params.at("t"), tol);
      return io::record_from_verdict(r.id, r.detector, v);
    }
    case Detector::ScatteringCurie: {
      const auto v = curie::scattering_curie_check(matrix_of(s, "smatrix"), transform_of(s, r, "symmetry", tol),
                                                   state_of(s, r, "state_in"), state_of(s, r, "state_out"), tol);
      return io::record_from_verdict(r.id, r.detector, v);
    }
    case Detector::SMatrixInference: {
      const SymmetryTransform sym = transform_of(s, r, "symmetry", tol);
      const ComplexMatrix& h0 = matrix_of(s, "h0");
      const ComplexMatrix smat = r.params.count("ti")
                                     ? models::build_s_matrix(h0, matrix_of(s, "v"), r.params.at("ti"),
                                                              r.params.at("tf"), tol)
                                     : matrix_of(s, "smatrix");
      const auto v = curie::s_matrix_inference(invariance_margin(sym, h0), invariance_margin(sym, smat),
                                               sym.label(), tol);
      return io::record_from_verdict(r.id, r.detector, v);
    }
    case Detector::CptLink: {
      const ComplexMatrix& h = matrix_of(s, "hamiltonian");
      const auto v = cpt_link_inference(invariance_margin(transform_of(s, r, "cpt", tol), h),
                                        invariance_margin(transform_of(s, r, "cp", tol), h), tol);
      return io::record_from_verdict(r.id, r.detector, v);
    }
    case Detector::Kabir: {
      const ComplexMatrix smat = r.params.count("t") ? ComplexMatrix(linalg::evolution(matrix_of(s, "hamiltonian"),
                                                                                       r.params.at("t")))
                                                     : matrix_of(s, "smatrix");
      const auto v = kabir::kabir_check(smat, transform_of(s, r, "symmetry", tol), state_of(s, r, "state_in"),
                                        state_of(s, r, "state_out"), tol);
      return io::record_from_verdict(r.id, r.detector, v);
    }
    case Detector::Wigner: {
      const auto v = wigner::wigner_principle_check(matrix_of(s, "hamiltonian"), transform_of(s, r, "symmetry", tol),
                                                    param_or(r, "gap_tol", tol.gap_tol), tol);
      return io::record_from_verdict(r.id, r.detector, v);
    }
    case Detector::Kramers: {
      const auto k = wigner::kramers_degeneracy_verify(matrix_of(s, "hamiltonian"),
                                                       transform_of(s, r, "symmetry", tol),
                                                       param_or(r, "gap_tol", tol.gap_tol), tol);
      return kramers_record(r.id, k);
    }
  }
  throw Error("unreachable detector");
}

}  // namespace

Tolerances effective_tolerances(const io::Scenario& s, const RunOptions& opt) {
  Tolerances tol = opt.overrides.apply_to(s.tolerances.apply_to({}));
  tol.validate();
  return tol;
}

io::Record run_request(const io::Scenario& s, std::size_t index, const Tolerances& tol) {
  const io::Request& r = s.requests.at(index);
  try {
    return dispatch(s, r, tol);
  } catch (const io::ScenarioError&) {
    throw;
  } catch (const Error& e) {
    throw io::ScenarioError("$.requests[" + std::to_string(index) + "]", e.what());
  }
}

io::Report run_scenario(const io::Scenario& s, const RunOptions& opt) {
  return run_batch({s}, opt).front();
}

std::vector<io::Report> run_batch(const std::vector<io::Scenario>& scenarios, const RunOptions& opt) {
  std::vector<io::Report> reports(scenarios.size());
  std::vector<Tolerances> tols;
  struct Job {
    std::size_t scenario;
    std::size_t request;
  };
  std::vector<Job> jobs;
  for (std::size_t i = 0; i < scenarios.size(); ++i) {
    tols.push_back(effective_tolerances(scenarios[i], opt));
    reports[i].records.resize(scenarios[i].requests.size());
    reports[i].provenance.tolerances = tols.back();
    reports[i].provenance.seed = opt.seed ? opt.seed : scenarios[i].seed;
    reports[i].provenance.tool_version = kToolVersion;
    for (std::size_t k = 0; k < scenarios[i].requests.size(); ++k) jobs.push_back({i, k});
  }

  std::vector<std::exception_ptr> errors(jobs.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t j = next++; j < jobs.size(); j = next++) {
      const auto [si, ri] = jobs[j];
      try {
        reports[si].records[ri] = run_request(scenarios[si], ri, tols[si]);
      } catch (...) {
        errors[j] = std::current_exception();
      }
    }
  };
  const unsigned threads = std::max(1u, std::min<unsigned>(opt.jobs, static_cast<unsigned>(jobs.size())));
  if (threads <= 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
  }
  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  return reports;
}

}  // namespace tvd
