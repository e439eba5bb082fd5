#include "commands.hpp"

#include <charconv>
#include <functional>
#include <map>
#include <sstream>
#include <stdexcept>

#include <nlohmann/json.hpp>

#include "gtsh/aff2.hpp"
#include "gtsh/dihedral.hpp"
#include "gtsh/lochak_schneps.hpp"
#include "gtsh/poset.hpp"
#include "gtsh/shadow.hpp"
#include "gtsh/structure.hpp"

namespace gtsh::cli {

using json = nlohmann::json;

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

Int require(const std::optional<Int>& v, const char* flag) {
  if (!v) throw UsageError(std::string("missing required flag ") + flag);
  return *v;
}

Int require_modulus(const std::optional<Int>& v, const char* flag) {
  const Int n = require(v, flag);
  if (n < 3) throw UsageError(std::string(flag) + " must be >= 3");
  return n;
}

Shadow require_shadow(Int n, const std::optional<std::string>& text, const char* flag) {
  if (!text) throw UsageError(std::string("missing required flag ") + flag);
  try {
    const auto [m, k] = parse_coordinates(*text);
    return Shadow::make(n, m, k);
  } catch (const std::invalid_argument& e) {
    throw UsageError(std::string(flag) + ": " + e.what());
  }
}

json shadow_record(const Shadow& s) {
  return {{"n", s.n}, {"m", s.m}, {"k", s.k}, {"u", s.u()}, {"word", s.representative_word().to_string()}};
}

std::string format_of(const CommandConfig& c, const char* fallback) {
  const std::string f = c.format.value_or(fallback);
  if (f != "json" && f != "csv") throw UsageError("--format must be json or csv");
  return f;
}

void json_only(const CommandConfig& c) {
  if (format_of(c, "json") != "json") throw UsageError("command `" + c.command + "` only emits json");
}

RunResult ok(const json& report, bool passed = true) {
  RunResult r;
  r.exit_code = passed ? kOk : kVerificationFailed;
  r.output = report.dump() + "\n";
  if (!passed) r.error = "verification failed";
  return r;
}

RunResult cmd_enumerate(const CommandConfig& c) {
  json_only(c);
  const Int n = require_modulus(c.n, "--n");
  const auto closed = enumerate_closed(n);
  json report{{"n", n}, {"canonical", canonicalize(n)}, {"count", closed.size()}};
  json list = json::array();
  for (const auto& s : closed) list.push_back(shadow_record(s));
  report["shadows"] = list;
  bool passed = true;
  if (c.check) {
    if (n > c.bound) throw UsageError("--n exceeds the enumeration bound " + std::to_string(c.bound));
    passed = enumerate_brute(n, c.bound) == closed;
    report["brute_equals_closed"] = passed;
  }
  return ok(report, passed);
}

RunResult cmd_compose(const CommandConfig& c) {
  json_only(c);
  const Int n = require_modulus(c.n, "--n");
  const Shadow a = require_shadow(n, c.a, "--a");
  const Shadow b = require_shadow(n, c.b, "--b");
  const Shadow out = compose(a, b);
  json report = shadow_record(out);
  bool passed = true;
  if (c.check) {
    passed = out == compose_closed(a, b);
    report["closed_law_agrees"] = passed;
  }
  return ok(report, passed);
}

RunResult cmd_invert(const CommandConfig& c) {
  json_only(c);
  const Int n = require_modulus(c.n, "--n");
  const Shadow a = require_shadow(n, c.a, "--a");
  const Shadow inv = inverse(a);
  json report = shadow_record(inv);
  bool passed = true;
  if (c.check) {
    passed = compose(a, inv) == Shadow::identity(n) && compose(inv, a) == Shadow::identity(n);
    report["two_sided"] = passed;
  }
  return ok(report, passed);
}

RunResult cmd_table(const CommandConfig& c) {
  const std::string fmt = format_of(c, "csv");
  const Int n = require_modulus(c.n, "--n");
  const auto elems = enumerate_closed(n);
  if (fmt == "json") {
    json labels = json::array();
    for (const auto& s : elems) labels.push_back(s.label());
    json rows = json::array();
    for (const auto& a : elems) {
      json row = json::array();
      for (const auto& b : elems) row.push_back(compose(a, b).label());
      rows.push_back(row);
    }
    return ok(json{{"n", canonicalize(n)}, {"labels", labels}, {"table", rows}});
  }
  std::ostringstream os;
  os << "m.k";
  for (const auto& s : elems) os << ',' << s.label();
  os << '\n';
  for (const auto& a : elems) {
    os << a.label();
    for (const auto& b : elems) os << ',' << compose(a, b).label();
    os << '\n';
  }
  RunResult r;
  r.output = os.str();
  return r;
}

RunResult cmd_reduce(const CommandConfig& c) {
  json_only(c);
  const Int q = require_modulus(c.q, "--q");
  const Int n = require_modulus(c.n, "--n");
  if (!poset_leq(q, n)) throw UsageError("K^(q) is not contained in K^(n): n must divide lcm(q, 2)");
  const Shadow s = require_shadow(q, c.a, "--a");
  return ok(json{{"q", q}, {"n", n}, {"source", shadow_record(s)}, {"image", shadow_record(reduce_shadow(s, n))}});
}

RunResult cmd_fibers(const CommandConfig& c) {
  json_only(c);
  const Int q = require_modulus(c.q, "--q");
  const Int n = require_modulus(c.n, "--n");
  if (q > c.bound) throw UsageError("--q exceeds the enumeration bound " + std::to_string(c.bound));
  if (!poset_leq(q, n)) throw UsageError("K^(q) is not contained in K^(n): n must divide lcm(q, 2)");
  const auto fibers = fiber_report(q, n);
  const std::size_t expected = enumerate_closed(q).size() / fibers.size();
  json list = json::array();
  bool surjective = true, uniform = true;
  for (const auto& [t, size] : fibers) {
    list.push_back({{"m", t.m}, {"k", t.k}, {"size", size}});
    surjective = surjective && size > 0;
    uniform = uniform && size == expected;
  }
  return ok(json{{"q", q}, {"n", n}, {"fibers", list}, {"surjective", surjective}, {"uniform", uniform}},
            surjective && uniform);
}

RunResult cmd_ls_witness(const CommandConfig& c) {
  json_only(c);
  const Int n = require_modulus(c.n, "--n");
  if (canonicalize(n) % 3 != 0) throw UsageError("ls-witness requires 3 | n");
  Shadow s;
  if (c.a) {
    s = require_shadow(n, c.a, "--a");
  } else {
    try {
      s = Shadow::make(n, require(c.m, "--m"), require(c.k, "--k"));
    } catch (const std::invalid_argument& e) {
      throw UsageError(e.what());
    }
  }
  if (mod(s.m, 3) == 1) throw UsageError("ls-witness: m = 1 mod 3 has no witness pair");
  const auto w = ls_witness(s);
  const bool verified = ls_verify(s, w.g, w.h);
  return ok(json{{"g", w.g.to_string()}, {"h", w.h.to_string()}, {"case", ls_case_name(w.which)}, {"verified", verified}},
            verified);
}

RunResult cmd_structure(const CommandConfig& c) {
  json_only(c);
  const Int n = require_modulus(c.n, "--n");
  const auto d = structure_of(n);
  json report{{"n", d.n}, {"n0", d.n0}, {"alpha", d.alpha}, {"factors", d.factors}, {"order", d.order}};
  bool passed = true;
  if (c.check) {
    passed = static_cast<Int>(enumerate_closed(n).size()) == d.order;
    report["order_matches_enumeration"] = passed;
  }
  return ok(report, passed);
}

RunResult cmd_index(const CommandConfig& c) {
  json_only(c);
  const Int n = require_modulus(c.n, "--n");
  json report{{"n", n}, {"index", index_pb3(n)}};
  bool passed = true;
  if (c.check) {
    const std::array<DihTriple, 2> gens{xbar(n), ybar(n)};
    const auto size = static_cast<Int>(bfs_closure(n, gens).size());
    report["bfs_closure_size"] = size;
    passed = size == index_pb3(n);
  }
  return ok(report, passed);
}

RunResult cmd_bound(const CommandConfig& c) {
  json_only(c);
  const Int n = require_modulus(c.n, "--n");
  return ok(json{{"n", n}, {"lower_bound", arith_lower_bound(n)}, {"order", structure_of(n).order}});
}

RunResult cmd_profinite(const CommandConfig& c) {
  json_only(c);
  const Int alpha = require(c.alpha, "--alpha");
  if (alpha < 2) throw UsageError("--alpha must be >= 2");
  if (alpha > kDefaultClosureBound && alpha > c.bound)
    throw UsageError("--alpha exceeds the closure bound; raise --bound");
  const auto closure = generator_closure(alpha, std::max(c.bound, kDefaultClosureBound));
  std::size_t members = 0;
  bool kernel_eq = true;
  std::vector<AffTrunc> member_set;
  for (const auto& a : f_elements(alpha)) {
    const bool in = ftilde_membership(a);
    if (in) {
      ++members;
      member_set.push_back(a);
    }
    kernel_eq = kernel_eq && (in == (psi_map(a) == 0));
  }
  const bool closure_eq = closure == member_set;
  const Int expected = Int{1} << (2 * alpha - 2);
  const bool passed = kernel_eq && closure_eq && static_cast<Int>(closure.size()) == expected;
  return ok(json{{"alpha", alpha},
                 {"closure_size", closure.size()},
                 {"membership_count", members},
                 {"expected_order", expected},
                 {"kernel_equals_membership", kernel_eq},
                 {"closure_equals_membership", closure_eq}},
            passed);
}

RunResult cmd_verify_all(const CommandConfig& c) {
  json_only(c);
  const Int n = require_modulus(c.n, "--n");
  const auto outcomes = verify_all(n, c.bound);
  json checks = json::array();
  bool passed = true;
  for (const auto& o : outcomes) {
    json item{{"name", o.name}, {"passed", o.passed}};
    if (!o.detail.empty()) item["detail"] = o.detail;
    checks.push_back(item);
    passed = passed && o.passed;
  }
  RunResult r = ok(json{{"n", n}, {"checks", checks}, {"passed", passed}}, passed);
  if (!passed) r.error = "verification failed: " + outcomes.back().name + " " + outcomes.back().detail;
  return r;
}

using Handler = RunResult (*)(const CommandConfig&);

const std::map<std::string, Handler>& handlers() {
  static const std::map<std::string, Handler> table{
      {"enumerate", cmd_enumerate}, {"compose", cmd_compose},       {"invert", cmd_invert},
      {"table", cmd_table},         {"reduce", cmd_reduce},         {"fibers", cmd_fibers},
      {"ls-witness", cmd_ls_witness}, {"structure", cmd_structure}, {"index", cmd_index},
      {"bound", cmd_bound},         {"profinite", cmd_profinite},   {"verify-all", cmd_verify_all},
  };
  return table;
}

}  // namespace

const std::vector<std::string>& command_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> out;
    for (const auto& [name, _] : handlers()) out.push_back(name);
    return out;
  }();
  return names;
}

std::pair<Int, Int> parse_coordinates(const std::string& text) {
  const auto comma = text.find(',');
  if (comma == std::string::npos) throw std::invalid_argument("expected coordinates `m,k`, got `" + text + "`");
  auto parse_one = [&](std::string_view part) {
    Int v = 0;
    const char* first = part.data();
    const char* last = part.data() + part.size();
    auto [ptr, ec] = std::from_chars(first, last, v);
    if (ec != std::errc() || ptr != last || part.empty())
      throw std::invalid_argument("malformed coordinate `" + std::string(part) + "`");
    return v;
  };
  const std::string_view view(text);
  return {parse_one(view.substr(0, comma)), parse_one(view.substr(comma + 1))};
}

RunResult run(const CommandConfig& config) {
  RunResult r;
  const auto it = handlers().find(config.command);
  if (it == handlers().end()) {
    r.exit_code = kUsageError;
    r.error = "unknown command `" + config.command + "`";
    return r;
  }
  try {
    return it->second(config);
  } catch (const UsageError& e) {
    r.exit_code = kUsageError;
    r.error = e.what();
  } catch (const std::invalid_argument& e) {
    r.exit_code = kUsageError;
    r.error = e.what();
  } catch (const std::out_of_range& e) {
    r.exit_code = kUsageError;
    r.error = e.what();
  } catch (const std::exception& e) {
    r.exit_code = kVerificationFailed;
    r.error = e.what();
  }
  return r;
}

}  // namespace gtsh::cli
