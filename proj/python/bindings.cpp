// Python extension. Rationals cross the boundary as "p/q" strings; the
// cardbin package turns them into fractions.Fraction.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "cardbin/adversary.hpp"
#include "cardbin/algorithms.hpp"
#include "cardbin/analysis.hpp"
#include "cardbin/cli.hpp"
#include "cardbin/generators.hpp"
#include "cardbin/io.hpp"
#include "cardbin/oracle.hpp"

namespace py = pybind11;
using namespace cardbin;

namespace {

using Groups = std::vector<std::vector<std::size_t>>;

Instance make_instance(int k, const std::vector<std::string>& sizes) {
  std::vector<Rational> parsed;
  parsed.reserve(sizes.size());
  for (const auto& s : sizes) parsed.push_back(Rational::parse(s));
  return Instance(k, std::move(parsed));
}

std::vector<std::string> size_strings(const Instance& instance) {
  std::vector<std::string> out;
  out.reserve(instance.size());
  for (const auto& s : instance.sizes()) out.push_back(s.str());
  return out;
}

std::optional<Rational> maybe_rational(const std::optional<std::string>& text) {
  if (!text) return std::nullopt;
  return Rational::parse(*text);
}

ItemRole parse_role(const std::string& name) {
  for (ItemRole r : {ItemRole::alpha, ItemRole::additional, ItemRole::gamma1, ItemRole::gamma2, ItemRole::phi}) {
    if (name == to_string(r)) return r;
  }
  throw ParameterError("unknown role '" + name + "'");
}

py::dict certificate_dict(const Certificate& c) {
  py::dict d;
  d["bins"] = c.packing.groups();
  d["claim"] = std::string(to_string(c.claim));
  d["count"] = c.claimed_count;
  return d;
}

py::dict run(const std::string& alg, int k, const std::vector<std::string>& sizes) {
  const RunResult r = run_algorithm(alg, make_instance(k, sizes));
  py::dict d;
  d["bins"] = r.packing.groups();
  d["trace"] = r.trace;
  return d;
}

py::dict opt(int k, const std::vector<std::string>& sizes, std::uint64_t budget) {
  const OptResult r = exact_opt(make_instance(k, sizes), budget);
  py::dict d = certificate_dict(r.certificate);
  d["exact"] = r.exact;
  d["nodes"] = r.nodes;
  return d;
}

std::vector<std::string> validate(int k, const std::vector<std::string>& sizes, const Groups& bins) {
  const Instance in = make_instance(k, sizes);
  std::vector<std::string> out;
  for (const auto& v : validate_packing(in, Packing::from_groups(in, bins)).violations) out.push_back(v.message);
  return out;
}

py::dict generate(const std::string& family, int k, std::optional<long> ell, std::optional<long> n, int stop,
                  const std::optional<std::string>& eps, const std::optional<std::string>& delta) {
  GeneratedFamily f = [&]() {
    if (family == "batch") {
      if (!n) throw ParameterError("family batch needs n");
      return gen_batches(k, *n, maybe_rational(delta).value_or(default_batch_delta()), stop);
    }
    if (family == "ff-small") return gen_ff_killer_small(k, ell.value_or(1), maybe_rational(eps));
    if (family == "ff-mid") return gen_ff_killer_mid(k, ell.value_or(k), maybe_rational(eps), maybe_rational(delta));
    if (family == "ff-large") {
      return gen_ff_killer_large(k, ell.value_or(killer_ell(k)), maybe_rational(eps), maybe_rational(delta));
    }
    throw ParameterError("unknown family '" + family + "'");
  }();
  py::dict d;
  d["name"] = f.name;
  d["k"] = k;
  d["sizes"] = size_strings(f.instance);
  d["certificate"] = certificate_dict(f.certificate);
  d["predicted_ff"] = f.predicted_ff ? py::cast(*f.predicted_ff) : py::none();
  return d;
}

py::dict duel(const std::string& adversary, const std::string& alg, std::optional<int> k,
              const std::optional<std::string>& eps) {
  std::unique_ptr<AdaptiveAdversary> adv;
  if (adversary == "abs-k3") {
    if (k && *k != 3) throw ParameterError("abs-k3 plays k = 3 only");
    adv = std::make_unique<AbsK3>(maybe_rational(eps).value_or(AbsK3::default_eps()));
  } else if (adversary == "abs-k4plus") {
    const int kk = k.value_or(4);
    adv = std::make_unique<AbsK4Plus>(kk, maybe_rational(eps).value_or(AbsK4Plus::default_eps(kk)));
  } else {
    throw ParameterError("unknown adversary '" + adversary + "' (batch duels use batch_duel)");
  }
  auto algorithm = make_algorithm(alg, adv->k());
  const DuelResult r = run_duel(*adv, *algorithm);
  py::dict d;
  d["sizes"] = size_strings(r.instance);
  d["algorithm_bins"] = r.algorithm_packing.groups();
  d["certificate"] = certificate_dict(r.certificate);
  d["ratio"] = r.ratio.str();
  return d;
}

py::dict batch_duel(const std::string& alg, int k, long n, const std::optional<std::string>& delta) {
  const BatchDuelResult r = run_batch_duel(alg, k, n, maybe_rational(delta).value_or(default_batch_delta()));
  py::list stops;
  for (const auto& s : r.stops) {
    py::dict e;
    e["stop"] = s.stop;
    e["algorithm_bins"] = s.algorithm_bins;
    e["certificate_bins"] = s.certificate_bins;
    e["ratio"] = s.ratio.str();
    stops.append(e);
  }
  py::dict d;
  d["stops"] = stops;
  d["max_ratio"] = r.max_ratio.str();
  return d;
}

py::list table(int k_from, int k_to, std::optional<long> ell) {
  py::list rows;
  for (const auto& r : ratio_table(k_from, k_to, ell)) {
    py::dict d;
    d["k"] = r.k;
    d["family"] = r.family;
    d["ell"] = r.ell;
    d["ff"] = r.ff_bins;
    d["certificate"] = r.certificate_bins;
    d["ratio"] = r.ratio.str();
    d["asymptote"] = r.asymptote.str();
    rows.append(d);
  }
  return rows;
}

py::tuple cli(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = run_cli(args, out, err);
  return py::make_tuple(code, out.str(), err.str());
}

}  // namespace

PYBIND11_MODULE(_cardbin, m) {
  m.doc() = "Cardinality-constrained online bin packing";

  py::register_exception<Error>(m, "Error", PyExc_ValueError);

  m.def("algorithm_names", &algorithm_names);
  m.def("run", &run, py::arg("alg"), py::arg("k"), py::arg("sizes"));
  m.def("exact_opt", &opt, py::arg("k"), py::arg("sizes"), py::arg("budget") = kDefaultNodeBudget);
  m.def("validate", &validate, py::arg("k"), py::arg("sizes"), py::arg("bins"));
  m.def(
      "trivial_lower_bound", [](int k, const std::vector<std::string>& sizes) {
        return trivial_lower_bound(make_instance(k, sizes));
      },
      py::arg("k"), py::arg("sizes"));
  m.def("generate", &generate, py::arg("family"), py::arg("k"), py::arg("ell") = py::none(),
        py::arg("n") = py::none(), py::arg("stop") = 4, py::arg("eps") = py::none(), py::arg("delta") = py::none());
  m.def("duel", &duel, py::arg("adversary"), py::arg("alg"), py::arg("k") = py::none(), py::arg("eps") = py::none());
  m.def("batch_duel", &batch_duel, py::arg("alg"), py::arg("k"), py::arg("n"), py::arg("delta") = py::none());
  m.def("lb_value", [](int k) { return lb_value(k).str(); }, py::arg("k"));
  m.def(
      "item_weight", [](int k, const std::string& role, const std::string& size) {
        return item_weight(k, parse_role(role), Rational::parse(size)).str();
      },
      py::arg("k"), py::arg("role"), py::arg("size"));
  m.def("ratio_table", &table, py::arg("k_from"), py::arg("k_to"), py::arg("ell") = py::none());
  m.def(
      "read_instance", [](const std::string& text) {
        const Instance in = read_instance(text);
        return py::make_tuple(in.k(), size_strings(in));
      },
      py::arg("text"));
  m.def(
      "write_instance", [](int k, const std::vector<std::string>& sizes) {
        return write_instance(make_instance(k, sizes));
      },
      py::arg("k"), py::arg("sizes"));
  m.def("cli", &cli, py::arg("args"));
}
