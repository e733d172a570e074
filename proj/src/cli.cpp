#include "icg/cli.hpp"

#include <chrono>
#include <iomanip>
#include <optional>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "icg/energy.hpp"
#include "icg/number_theory.hpp"
#include "icg/search.hpp"
#include "icg/transform.hpp"

namespace icg::cli {
namespace {

using Json = nlohmann::ordered_json;

class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct Globals {
  std::string format = "table";
  unsigned jobs = 1;
  bool timing = false;
};

// Instance flags shared by energy, classify and spectrum.
struct InstanceFlags {
  std::string p, exponents, n, divisors;
  unsigned s = 0;

  void attach(CLI::App* cmd) {
    cmd->add_option("--p", p, "Prime p of the order n = p^s");
    cmd->add_option("--s", s, "Exponent s >= 1 of the order n = p^s");
    cmd->add_option("--exponents", exponents, "Comma-separated exponents a_1 < ... < a_r");
    cmd->add_option("--n", n, "Graph order n");
    cmd->add_option("--divisors", divisors, "Comma-separated proper divisors of n");
  }
};

struct Instance {
  Natural n;
  DivisorSet set;
  std::optional<PrimePowerOrder> order;
  std::optional<ExponentTuple> exponents;
};

Instance resolve(const InstanceFlags& f) {
  const bool prime_power_form = !f.p.empty() || f.s != 0 || !f.exponents.empty();
  const bool general_form = !f.n.empty() || !f.divisors.empty();
  if (prime_power_form == general_form) {
    throw UsageError("give either --p/--s/--exponents or --n/--divisors");
  }
  if (prime_power_form) {
    if (f.p.empty() || f.s == 0 || f.exponents.empty()) {
      throw UsageError("--p, --s (>= 1) and --exponents are all required");
    }
    PrimePowerOrder order(Natural::parse(f.p), f.s);
    ExponentTuple tuple(parse_index_list(f.exponents), f.s);
    DivisorSet set = divisor_set_of(tuple, order);
    return {order.n(), std::move(set), order, std::move(tuple)};
  }
  if (f.n.empty() || f.divisors.empty()) throw UsageError("--n and --divisors are both required");
  Natural n = Natural::parse(f.n);
  DivisorSet set(parse_natural_list(f.divisors), n);
  Instance inst{n, std::move(set), std::nullopt, std::nullopt};
  if (n <= Natural(kFactorizationCap) && n > Natural(1)) {
    const auto fac = factorize(n);
    if (fac.factors().size() == 1) {
      PrimePowerOrder order(fac.factors().front().prime, fac.factors().front().multiplicity);
      try {
        inst.exponents = exponents_of(inst.set, order);
        inst.order = order;
      } catch (const std::invalid_argument&) {
      }
    }
  }
  return inst;
}

Json instance_json(const Instance& inst) {
  Json j;
  if (inst.order) {
    j["p"] = inst.order->p().str();
    j["s"] = inst.order->s();
  }
  j["n"] = inst.n.str();
  if (inst.exponents) j["exponents"] = to_string(*inst.exponents);
  j["divisors"] = to_string(inst.set);
  return j;
}

Json tuple_json(const ExponentTuple& t, const PrimePowerOrder& order) {
  Json j;
  j["exponents"] = to_string(t);
  if (AdmissibleTuple::is_admissible(t)) j["delta"] = to_string(delta(AdmissibleTuple(t)));
  j["divisors"] = to_string(divisor_set_of(t, order));
  return j;
}

Json set_list_json(const std::vector<DivisorSet>& sets) {
  Json arr = Json::array();
  for (const auto& d : sets) arr.push_back(to_string(d));
  return arr;
}

// Table rendering: one "key  value" line per scalar, nested keys joined by '.'.
void flatten(const Json& j, const std::string& prefix, std::vector<std::pair<std::string, std::string>>& rows) {
  if (j.is_object()) {
    for (const auto& [k, v] : j.items()) flatten(v, prefix.empty() ? k : prefix + "." + k, rows);
  } else if (j.is_array()) {
    for (std::size_t i = 0; i < j.size(); ++i) flatten(j[i], prefix + "[" + std::to_string(i) + "]", rows);
  } else if (j.is_string()) {
    rows.emplace_back(prefix, j.get<std::string>());
  } else {
    rows.emplace_back(prefix, j.dump());
  }
}

void print_rows(std::ostream& out, const Json& record) {
  std::vector<std::pair<std::string, std::string>> rows;
  flatten(record, "", rows);
  std::size_t width = 0;
  for (const auto& r : rows) width = std::max(width, r.first.size());
  for (const auto& [k, v] : rows) out << std::left << std::setw(static_cast<int>(width + 2)) << k << v << '\n';
}

Json make_record(const std::string& command, Json inputs) {
  Json rec;
  rec["command"] = command;
  rec["inputs"] = std::move(inputs);
  rec["results"] = Json::object();
  return rec;
}

class Session {
 public:
  Session(std::ostream& out, const Globals& g) : out_(out), g_(g), start_(std::chrono::steady_clock::now()) {}

  void require_format(std::initializer_list<const char*> allowed, const std::string& command) const {
    for (const char* f : allowed) {
      if (g_.format == f) return;
    }
    throw UsageError("--format " + g_.format + " is not supported by '" + command + "'");
  }

  void stamp(Json& rec) const {
    if (!g_.timing) return;
    const auto elapsed = std::chrono::steady_clock::now() - start_;
    rec["timing_ms"] = std::chrono::duration<double, std::milli>(elapsed).count();
  }

  void emit(Json rec) const {
    stamp(rec);
    if (g_.format == "json") {
      out_ << rec.dump(2) << '\n';
    } else {
      print_rows(out_, rec);
    }
  }

  std::ostream& out() const { return out_; }
  const Globals& globals() const { return g_; }

 private:
  std::ostream& out_;
  const Globals& g_;
  std::chrono::steady_clock::time_point start_;
};

int cmd_energy(const Session& session, const InstanceFlags& flags, std::string method) {
  session.require_format({"table", "json"}, "energy");
  const Instance inst = resolve(flags);
  if (method.empty()) method = flags.n.empty() ? "formula" : "spectral";
  if (method != "spectral" && !inst.order) {
    throw UsageError("the formula method needs a prime-power order with a divisor set of powers of p");
  }
  Json rec = make_record("energy", instance_json(inst));
  auto& res = rec["results"];
  int code = kOk;
  if (method == "formula") {
    res["energy"] = energy_prime_power(*inst.order, *inst.exponents).str();
    res["method"] = "formula";
  } else if (method == "spectral") {
    res["energy"] = energy_general(inst.n, inst.set, session.globals().jobs).str();
    res["method"] = "spectral";
  } else {
    const Natural formula = energy_prime_power(*inst.order, *inst.exponents);
    const Natural spectral = energy_general(inst.n, inst.set, session.globals().jobs);
    res["energy"] = formula.str();
    res["formula"] = formula.str();
    res["spectral"] = spectral.str();
    res["agreement"] = formula == spectral;
    if (formula != spectral) code = kDiscrepancy;
  }
  session.emit(std::move(rec));
  return code;
}

int cmd_emax(const Session& session, const std::string& p, unsigned s, bool brute) {
  session.require_format({"table", "json"}, "emax");
  const PrimePowerOrder order(Natural::parse(p), s);
  Json inputs;
  inputs["p"] = order.p().str();
  inputs["s"] = s;
  inputs["n"] = order.n().str();
  Json rec = make_record("emax", std::move(inputs));
  auto& res = rec["results"];

  const auto closed = emax_closed(order);
  res["emax"] = closed.value.str();
  res["maximizers"] = Json::array();
  for (const auto& t : closed.maximizers) res["maximizers"].push_back(tuple_json(t, order));
  const auto alt = emax_alternative(order);
  res["factor"] = alt.factor.str();
  res["cofactor"] = alt.cofactor.str();

  int code = kOk;
  if (brute) {
    if (s > kMaxBruteForceExponent) {
      throw ResourceError("emax --brute: s = " + std::to_string(s) + " exceeds " +
                          std::to_string(kMaxBruteForceExponent));
    }
    const auto check = verify_theorem(order, session.globals().jobs);
    Json b;
    b["emax"] = check.brute_value.str();
    b["maximizers"] = set_list_json(check.found);
    b["examined"] = check.examined;
    b["agreement"] = check.ok;
    res["brute_force"] = std::move(b);
    if (!check.ok) code = kDiscrepancy;
  }
  session.emit(std::move(rec));
  return code;
}

int cmd_emin(const Session& session, const std::string& p, unsigned s) {
  session.require_format({"table", "json"}, "emin");
  const PrimePowerOrder order(Natural::parse(p), s);
  Json inputs;
  inputs["p"] = order.p().str();
  inputs["s"] = s;
  inputs["n"] = order.n().str();
  Json rec = make_record("emin", std::move(inputs));
  const auto m = emin_closed(order);
  rec["results"]["emin"] = m.value.str();
  rec["results"]["minimizers"] = set_list_json(m.minimizers);
  session.emit(std::move(rec));
  return kOk;
}

std::vector<RuleSite> parse_sites(const std::string& text) {
  // LABEL@u or LABEL@u:v, comma-separated; "Ib-mirrored" selects the (1,2) split.
  std::vector<RuleSite> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    const auto at = item.find('@');
    if (at == std::string::npos) throw UsageError("replay site '" + item + "' lacks '@'");
    std::string name = item.substr(0, at);
    RuleSite site{};
    if (name == "Ib-mirrored") {
      site.label = TransformLabel::Ib;
      site.mirrored = true;
    } else {
      site.label = parse_label(name);
    }
    const std::string pos = item.substr(at + 1);
    const auto colon = pos.find(':');
    try {
      site.u = std::stoul(pos.substr(0, colon));
      if (colon != std::string::npos) site.v = std::stoul(pos.substr(colon + 1));
    } catch (const std::logic_error&) {
      throw UsageError("bad positions in replay site '" + item + "'");
    }
    out.push_back(site);
  }
  return out;
}

std::string site_name(const RuleSite& site) {
  return site.mirrored ? "Ib-mirrored" : to_string(site.label);
}

std::string csv_quote(const std::string& s) { return "\"" + s + "\""; }

int cmd_trace(const Session& session, const std::string& p, unsigned s, const std::string& delta_text,
              const std::string& replay_text) {
  session.require_format({"table", "json", "csv"}, "trace");
  const PrimePowerOrder order(Natural::parse(p), s);
  const DeltaVector d0(parse_index_list(delta_text), s);
  Trace trace = [&] {
    if (replay_text.empty()) return normalize(d0, order);
    const auto sites = parse_sites(replay_text);
    return replay(d0, order, sites);
  }();
  const Natural e0 = energy_prime_power(order, delta_inverse(d0));
  const Natural emax = emax_closed(order).value;
  const Natural& e_final = trace.steps.empty() ? e0 : trace.steps.back().energy_after;

  const std::string& fmt = session.globals().format;
  std::ostream& out = session.out();
  if (fmt == "csv") {
    out << "step,label,u,v,before,after,r,energy\n";
    out << "0,,,,," << csv_quote(to_string(d0)) << ',' << d0.r() << ',' << e0 << '\n';
    for (std::size_t i = 0; i < trace.steps.size(); ++i) {
      const auto& st = trace.steps[i];
      out << i + 1 << ',' << site_name(st.site) << ',' << st.site.u << ','
          << (st.site.v ? std::to_string(*st.site.v) : "") << ',' << csv_quote(to_string(st.before)) << ','
          << csv_quote(to_string(st.after)) << ',' << st.after.r() << ',' << st.energy_after << '\n';
    }
    return kOk;
  }

  if (fmt == "table") {
    std::size_t width = to_string(d0).size();
    for (const auto& st : trace.steps) width = std::max(width, to_string(st.after).size());
    auto row = [&](std::size_t l, const DeltaVector& d, const Natural& e) {
      out << std::right << std::setw(3) << l << "  " << std::left << std::setw(static_cast<int>(width + 2))
          << to_string(d) << std::right << std::setw(4) << d.r() << "  " << e << '\n';
    };
    out << std::right << std::setw(3) << "l" << "  " << std::left << std::setw(static_cast<int>(width + 2))
        << "d(l)" << std::right << std::setw(4) << "r" << "  " << "energy (n = " << order.p() << '^' << s
        << ")\n";
    row(0, d0, e0);
    for (std::size_t i = 0; i < trace.steps.size(); ++i) {
      const auto& st = trace.steps[i];
      out << "       | " << site_name(st.site) << " u=" << st.site.u;
      if (st.site.v) out << " v=" << *st.site.v;
      if (!st.strict) out << " (energy preserved)";
      out << '\n';
      row(i + 1, st.after, st.energy_after);
    }
    out << "steps " << trace.steps.size() << ", terminal " << to_string(trace.terminal) << ", E_max " << emax
        << (e_final == emax ? " (attained)" : "") << '\n';
    return kOk;
  }

  Json inputs;
  inputs["p"] = order.p().str();
  inputs["s"] = s;
  inputs["delta"] = to_string(d0);
  if (!replay_text.empty()) inputs["replay"] = replay_text;
  Json rec = make_record("trace", std::move(inputs));
  auto& res = rec["results"];
  res["initial"] = {{"delta", to_string(d0)}, {"r", d0.r()}, {"energy", e0.str()}};
  res["steps"] = Json::array();
  for (std::size_t i = 0; i < trace.steps.size(); ++i) {
    const auto& st = trace.steps[i];
    Json j;
    j["step"] = i + 1;
    j["label"] = to_string(st.site.label);
    j["u"] = st.site.u;
    j["v"] = st.site.v ? Json(*st.site.v) : Json(nullptr);
    j["mirrored"] = st.site.mirrored;
    j["before"] = to_string(st.before);
    j["after"] = to_string(st.after);
    j["r"] = st.after.r();
    j["energy_before"] = st.energy_before.str();
    j["energy_after"] = st.energy_after.str();
    j["strict"] = st.strict;
    res["steps"].push_back(std::move(j));
  }
  res["terminal"] = to_string(trace.terminal);
  res["emax"] = emax.str();
  res["attains_emax"] = e_final == emax;
  session.emit(std::move(rec));
  return kOk;
}

int cmd_classify(const Session& session, const InstanceFlags& flags) {
  session.require_format({"table", "json"}, "classify");
  const Instance inst = resolve(flags);
  const Natural energy = flags.n.empty() ? energy_prime_power(*inst.order, *inst.exponents)
                                         : energy_general(inst.n, inst.set, session.globals().jobs);
  Json rec = make_record("classify", instance_json(inst));
  auto& res = rec["results"];
  res["energy"] = energy.str();
  res["complete_graph_energy"] = (Natural(2) * inst.n.checked_sub(1)).str();
  res["classification"] = to_string(classify_energy(inst.n, energy));
  res["koolen_moulton"] = koolen_moulton_check(inst.n, energy);
  session.emit(std::move(rec));
  return kOk;
}

int cmd_spectrum(const Session& session, const InstanceFlags& flags) {
  session.require_format({"table", "json", "csv"}, "spectrum");
  const Instance inst = resolve(flags);
  const Spectrum spec = spectrum_gcd_graph(inst.n, inst.set);
  const std::string& fmt = session.globals().format;
  if (fmt == "csv" || fmt == "table") {
    session.out() << (fmt == "csv" ? "k,lambda\n" : "k  lambda_k\n");
    for (std::size_t k = 0; k < spec.eigenvalues.size(); ++k) {
      session.out() << k << (fmt == "csv" ? "," : "  ") << spec.eigenvalues[k] << '\n';
    }
    return kOk;
  }
  Json rec = make_record("spectrum", instance_json(inst));
  Json eig = Json::array();
  for (const auto& l : spec.eigenvalues) eig.push_back(l.str());
  rec["results"]["eigenvalues"] = std::move(eig);
  session.emit(std::move(rec));
  return kOk;
}

int cmd_verify(const Session& session, unsigned pmax, unsigned smax) {
  session.require_format({"table", "json"}, "verify");
  if (smax > kMaxBruteForceExponent) {
    throw ResourceError("verify: --smax " + std::to_string(smax) + " exceeds " +
                        std::to_string(kMaxBruteForceExponent));
  }
  if (pmax > 1000) throw ResourceError("verify: --pmax is capped at 1000");
  Json inputs;
  inputs["pmax"] = pmax;
  inputs["smax"] = smax;
  Json rec = make_record("verify", std::move(inputs));
  Json cases = Json::array();
  bool all_pass = true;
  for (unsigned p = 2; p <= pmax; ++p) {
    if (!is_prime(Natural(p))) continue;
    for (unsigned s = 1; s <= smax; ++s) {
      const auto check = verify_theorem(PrimePowerOrder(Natural(p), s), session.globals().jobs);
      Json c;
      c["p"] = p;
      c["s"] = s;
      c["closed"] = check.closed_value.str();
      c["brute"] = check.brute_value.str();
      c["maximizers"] = set_list_json(check.found);
      c["pass"] = check.ok;
      if (!check.ok) c["discrepancies"] = check.discrepancies;
      all_pass = all_pass && check.ok;
      cases.push_back(std::move(c));
    }
  }
  const std::size_t count = cases.size();
  rec["results"]["cases"] = std::move(cases);
  rec["results"]["all_pass"] = all_pass;
  if (session.globals().format == "json") {
    session.emit(std::move(rec));
  } else {
    auto& out = session.out();
    for (const auto& c : rec["results"]["cases"]) {
      out << "p=" << c["p"].get<unsigned>() << " s=" << c["s"].get<unsigned>() << "  E_max "
          << c["closed"].get<std::string>() << "  brute " << c["brute"].get<std::string>() << "  "
          << (c["pass"].get<bool>() ? "pass" : "FAIL") << '\n';
    }
    out << count << " cases, " << (all_pass ? "all pass" : "DISCREPANCIES FOUND") << '\n';
  }
  return all_pass ? kOk : kDiscrepancy;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact energies of integral circulant (gcd) graphs", "icg"};
  app.require_subcommand(1);
  Globals g;
  app.add_option("--format", g.format, "Output format")
      ->check(CLI::IsMember({"table", "json", "csv"}));
  app.add_option("--jobs", g.jobs, "Worker threads for scans and enumeration")->check(CLI::Range(1u, 256u));
  app.add_flag("--timing", g.timing, "Add wall-clock timing to the record");

  InstanceFlags energy_flags, classify_flags, spectrum_flags;
  std::string method;
  auto* energy = app.add_subcommand("energy", "Energy of one gcd graph");
  energy_flags.attach(energy);
  energy->add_option("--method", method, "formula | spectral | both")
      ->check(CLI::IsMember({"formula", "spectral", "both"}));

  std::string p;
  unsigned s = 0;
  bool brute = false;
  auto* emax = app.add_subcommand("emax", "Maximal energy and all maximizers for order p^s");
  emax->add_option("--p", p, "Prime p")->required();
  emax->add_option("--s", s, "Exponent s >= 1")->required();
  emax->add_flag("--brute", brute, "Cross-check by exhaustive enumeration (s <= 20)");

  auto* emin = app.add_subcommand("emin", "Minimal energy and all minimizers for order p^s");
  emin->add_option("--p", p, "Prime p")->required();
  emin->add_option("--s", s, "Exponent s >= 1")->required();

  std::string delta_text, replay_text;
  auto* trace = app.add_subcommand("trace", "Energy-increasing rewrite trace of a delta vector");
  trace->add_option("--p", p, "Prime p")->required();
  trace->add_option("--s", s, "Exponent s >= 2")->required();
  trace->add_option("--delta", delta_text, "Comma-separated delta vector")->required();
  trace->add_option("--replay", replay_text,
                    "Explicit sites instead of the default order, e.g. Ia@1,III@8:12,Ib-mirrored@2");

  auto* classify = app.add_subcommand("classify", "Hyper/hypoenergeticity and the Koolen-Moulton bound");
  classify_flags.attach(classify);

  auto* spectrum = app.add_subcommand("spectrum", "Eigenvalues lambda_0..lambda_{n-1}");
  spectrum_flags.attach(spectrum);

  unsigned pmax = 0, smax = 0;
  auto* verify = app.add_subcommand("verify", "Closed forms against exhaustive search over a grid");
  verify->add_option("--pmax", pmax, "Largest prime tested")->required();
  verify->add_option("--smax", smax, "Largest exponent tested")->required();

  for (auto* sub : {energy, emax, emin, trace, classify, spectrum, verify}) sub->fallthrough();

  std::vector<const char*> argv{"icg"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    Session session(out, g);
    if (*energy) return cmd_energy(session, energy_flags, method);
    if (*emax) return cmd_emax(session, p, s, brute);
    if (*emin) return cmd_emin(session, p, s);
    if (*trace) return cmd_trace(session, p, s, delta_text, replay_text);
    if (*classify) return cmd_classify(session, classify_flags);
    if (*spectrum) return cmd_spectrum(session, spectrum_flags);
    if (*verify) return cmd_verify(session, pmax, smax);
  } catch (const ResourceError& e) {
    err << "resource limit: " << e.what() << '\n';
    return kResource;
  } catch (const ConsistencyError& e) {
    err << "internal consistency failure: " << e.what() << '\n';
    return kDiscrepancy;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::domain_error& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}

}  // namespace icg::cli
