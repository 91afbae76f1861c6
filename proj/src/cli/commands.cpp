#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "starinv/cli.hpp"
#include "starinv/error.hpp"
#include "starinv/finite_ring.hpp"
#include "starinv/inverses.hpp"
#include "starinv/matrix_ring.hpp"
#include "starinv/oracle.hpp"
#include "starinv/orders.hpp"

namespace starinv::cli {

namespace {

using json = nlohmann::ordered_json;

struct NamedInput {
  std::string name;
  std::string source;
  MatrixDocument doc;
};

struct Session {
  std::istream& in;
  std::string default_field = "rational";
  bool stdin_used = false;

  // A path, "-" for standard input, or an inline document starting with '{'.
  NamedInput load(const std::string& name, const std::string& arg) {
    std::string source, text;
    if (arg.empty() || arg == "-") {
      if (stdin_used) throw Error(Errc::parse_error, "standard input can supply only one document");
      stdin_used = true;
      source = "<stdin>";
      text.assign(std::istreambuf_iterator<char>(in), {});
    } else if (arg.front() == '{') {
      source = "<" + name + ">";
      text = arg;
    } else {
      std::ifstream file(arg, std::ios::binary);
      if (!file) throw Error(Errc::parse_error, arg + ": cannot open file");
      source = arg;
      text.assign(std::istreambuf_iterator<char>(file), {});
    }
    return {name, source, parse_document(text, source, default_field)};
  }
};

json doc_json(const MatrixDocument& doc) { return json::parse(serialize(doc)); }

template <class F>
json matrix_json(const Matrix<F>& m) {
  return doc_json(to_document(AnyMatrix(m)));
}

json error_json(const Error& e) {
  return json{{"code", std::string(errc_name(e.code()))}, {"message", e.what()}};
}

int exit_for(Errc code) {
  switch (code) {
    case Errc::parse_error:
    case Errc::unknown_ring:
    case Errc::unknown_theorem:
    case Errc::ring_mismatch:
    case Errc::dimension_mismatch:
    case Errc::not_inner_inverse:
      return exit_input_error;
    default:
      return exit_negative;
  }
}

// All inputs must share one field; the visitor receives them as Matrix<F>.
template <class Fn>
json with_matrices(const std::vector<NamedInput>& inputs, Fn&& fn) {
  std::vector<AnyMatrix> ms;
  for (const auto& i : inputs) ms.push_back(to_matrix(i.doc, i.source));
  for (const auto& m : ms) {
    if (m.index() != ms.front().index() ||
        to_document(m).field != to_document(ms.front()).field) {
      throw Error(Errc::ring_mismatch, "inputs use different fields");
    }
  }
  return std::visit(
      [&](const auto& first) -> json {
        using M = std::decay_t<decltype(first)>;
        std::vector<M> typed;
        for (const auto& m : ms) typed.push_back(std::get<M>(m));
        return fn(typed);
      },
      ms.front());
}

struct Outcome {
  json result;
  int status = exit_ok;
};

template <class F>
json penrose_json(const Matrix<F>& a, const Matrix<F>& x) {
  const MatrixRing<F> ring(a.field());
  const auto p = penrose_profile(ring.element(a), ring.element(x));
  return json{{"axa=a", p.eq1}, {"xax=x", p.eq2}, {"(ax)*=ax", p.eq3}, {"(xa)*=xa", p.eq4}};
}

Outcome cmd_mp(const std::vector<NamedInput>& inputs) {
  Outcome out;
  out.result = with_matrices(inputs, [&](const auto& ms) -> json {
    const auto& a = ms[0];
    const auto x = try_mp_inverse(a);
    if (!x) {
      out.status = exit_negative;
      return json{{"mp_inverse", nullptr},
                  {"error", error_json(Error(Errc::not_mp_invertible,
                                             format_matrix(a) + " has no Moore-Penrose inverse"))}};
    }
    return json{{"mp_inverse", matrix_json(*x)}, {"penrose", penrose_json(a, *x)}};
  });
  return out;
}

Outcome cmd_inverse(const std::vector<NamedInput>& inputs, bool dual) {
  Outcome out;
  out.result = with_matrices(inputs, [&](const auto& ms) -> json {
    using M = std::decay_t<decltype(ms[0])>;
    const MatrixRing<typename M::Field> ring(ms[0].field());
    const auto a = ring.element(ms[0]);
    const auto g = ring.element(ms[1]);
    const auto x = dual ? mp_one(a, g) : one_mp(a, g);
    const auto ad = dagger(a);
    json system;
    system["xax=x"] = x * a * x == x;
    if (dual) {
      system["xa=a†a"] = x * a == ad * a;
    } else {
      system["ax=aa†"] = a * x == a * ad;
    }
    return json{{dual ? "mp_one" : "one_mp", matrix_json(x.value())},
                {"system", system},
                {dual ? "in_class_124" : "in_class_123",
                 is_member(a, x, dual ? class_124 : class_123)}};
  });
  return out;
}

template <class R>
bool witness_verified(Relation rel, const Element<R>& a, const Element<R>& b,
                      const OrderVerdict<R>& v) {
  auto need = [&](const char* name) -> const Element<R>& {
    const auto* w = v.find(name);
    if (!w) internal_failure(std::string("verdict lacks witness ") + name);
    return *w;
  };
  switch (rel) {
    case Relation::one_mp: return one_mp_witness_ok(a, b, need("x"), dagger(a));
    case Relation::mp_one: return mp_one_witness_ok(a, b, need("x"), dagger(a));
    case Relation::minus: return minus_equations(a, b, need("a_minus"));
    case Relation::diamond:
      return need("ab*a") == a * star(b) * a && need("ab*a") == a * star(a) * a;
    case Relation::plus: return plus_witness_ok(a, b, need("q_tilde"), need("q"));
  }
  return false;
}

Outcome cmd_order(Relation rel, const std::vector<NamedInput>& inputs, bool embed) {
  Outcome out;
  out.result = with_matrices(inputs, [&](auto ms) -> json {
    using M = std::decay_t<decltype(ms[0])>;
    if (embed) {
      std::size_t n = 0;
      for (const auto& m : ms) n = std::max({n, m.rows(), m.cols()});
      for (auto& m : ms) m = embed_square(m, n);
    }
    const MatrixRing<typename M::Field> ring(ms[0].field());
    const auto a = ring.element(ms[0]);
    const auto b = ring.element(ms[1]);
    const auto v = decide(rel, a, b);
    json r{{"relation", std::string(relation_name(rel))},
           {"holds", v.holds},
           {"method", std::string(method_name(v.method))}};
    if (v.holds) {
      if (!witness_verified(rel, a, b, v)) internal_failure("witness failed re-verification");
      json w = json::object();
      for (const auto& item : v.witness) w[item.name] = matrix_json(item.value.value());
      r["witness"] = w;
    } else {
      r["reason"] = v.reason;
      out.status = exit_negative;
    }
    return r;
  });
  return out;
}

json report_json(const TheoremReport& t) {
  return json{{"theorem", t.theorem},
              {"ring", t.ring},
              {"pass", t.pass()},
              {"skipped", t.skipped},
              {"exhaustive", t.exhaustive},
              {"instances", t.instances},
              {"violation_count", t.violation_count},
              {"violations", t.violations},
              {"notes", t.notes},
              {"elapsed_ms", static_cast<long long>(t.elapsed_ms)}};
}

std::vector<std::string> split_ids(const std::vector<std::string>& args) {
  std::vector<std::string> ids;
  for (const auto& arg : args) {
    std::stringstream ss(arg);
    std::string id;
    while (std::getline(ss, id, ',')) {
      if (!id.empty()) ids.push_back(id);
    }
  }
  return ids;
}

Outcome cmd_verify(const std::string& ring_id, const std::vector<std::string>& theorems) {
  const auto ring = FiniteStarRing::from_id(ring_id);
  auto ids = split_ids(theorems);
  if (ids.empty() || (ids.size() == 1 && ids[0] == "all")) {
    ids.assign(theorem_ids().begin(), theorem_ids().end());
  }
  for (const auto& id : ids) {
    if (!is_theorem_id(id)) verify_theorem(ring, id);  // throws UnknownTheorem
  }
  Outcome out;
  json reports = json::array();
  std::size_t failed = 0;
  for (const auto& id : ids) {
    const auto t = verify_theorem(ring, id);
    if (!t.pass()) ++failed;
    reports.push_back(report_json(t));
  }
  out.result = json{{"ring", ring.id()},
                    {"carrier", ring.carrier_description()},
                    {"size", ring.size()},
                    {"rickart", ring.is_rickart()},
                    {"rickart_star", ring.is_rickart_star()},
                    {"theorems", ids.size()},
                    {"failed", failed},
                    {"reports", reports}};
  if (failed > 0) out.status = exit_negative;
  return out;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err,
        std::istream& in) {
  CLI::App app{"Exact generalized inverses and orders in rings with involution", "starinv"};
  app.require_subcommand(1);
  app.fallthrough();

  std::string output_path, field = "rational";
  bool embed = false;
  app.add_option("--output", output_path, "Write the report to this path instead of stdout");
  app.add_option("--field", field, "Field for documents without a field key: rational | gf:<p>");
  app.add_flag("--embed-rectangular", embed,
               "Zero-pad rectangular inputs to a common square size for order checks");

  std::string a_arg, b_arg, rel_arg, ring_arg;
  std::vector<std::string> theorems;

  auto* mp = app.add_subcommand("mp", "Moore-Penrose inverse with the four Penrose checks");
  mp->add_option("a", a_arg, "Matrix document (path, - for stdin, or inline {...})");

  auto* onemp = app.add_subcommand("onemp", "1MP-inverse a⁻·a·a† for a given inner inverse");
  auto* mpone = app.add_subcommand("mpone", "MP1-inverse a†·a·a⁻ for a given inner inverse");
  for (auto* sub : {onemp, mpone}) {
    sub->add_option("a", a_arg, "Matrix document")->required();
    sub->add_option("a_minus", b_arg, "Inner inverse document")->required();
  }

  auto* order = app.add_subcommand("order", "Decide a ≤ b under 1mp | mp1 | minus | diamond | plus");
  order->add_option("relation", rel_arg, "1mp, mp1, minus, diamond or plus")->required();
  order->add_option("a", a_arg, "Matrix document")->required();
  order->add_option("b", b_arg, "Matrix document")->required();

  auto* verify = app.add_subcommand("verify", "Run theorem checks on a finite *-ring");
  verify->add_option("ring,--ring", ring_arg, "z<n> or m2gf<p>");
  verify->add_option("theorems,--theorems", theorems, "Theorem ids (comma separated) or all");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? exit_ok : exit_input_error;
  }

  json report;
  json args = json::array();
  for (int i = 1; i < argc; ++i) args.push_back(argv[i]);
  const auto* active = app.get_subcommands().front();
  report["command"] = json{{"name", active->get_name()}, {"args", args}};

  Session session{in, field};
  std::vector<NamedInput> inputs;
  Outcome outcome;
  try {
    if (active == mp) {
      inputs.push_back(session.load("a", a_arg));
      outcome = cmd_mp(inputs);
    } else if (active == onemp || active == mpone) {
      inputs.push_back(session.load("a", a_arg));
      inputs.push_back(session.load("a_minus", b_arg));
      outcome = cmd_inverse(inputs, active == mpone);
    } else if (active == order) {
      const auto rel = parse_relation(rel_arg);
      if (!rel) {
        throw Error(Errc::parse_error, "unknown relation \"" + rel_arg +
                                           "\" (expected 1mp, mp1, minus, diamond or plus)");
      }
      inputs.push_back(session.load("a", a_arg));
      inputs.push_back(session.load("b", b_arg));
      outcome = cmd_order(*rel, inputs, embed);
    } else {
      if (ring_arg.empty()) throw Error(Errc::unknown_ring, "no ring given");
      outcome = cmd_verify(ring_arg, theorems);
    }
  } catch (const Error& e) {
    outcome.result = json{{"error", error_json(e)}};
    outcome.status = exit_for(e.code());
  }

  std::string digest_input;
  json docs = json::object();
  for (const auto& i : inputs) {
    digest_input += serialize(i.doc) + "\n";
    docs[i.name] = doc_json(i.doc);
  }
  report["inputs_digest"] = "sha256:" + sha256_hex(digest_input);
  report["inputs"] = docs;
  report["result"] = outcome.result;
  report["exit_status"] = outcome.status;

  const auto text = report.dump(2) + "\n";
  if (output_path.empty()) {
    out << text;
  } else {
    std::ofstream file(output_path, std::ios::binary);
    if (!file) {
      err << "cannot write " << output_path << "\n";
      return exit_input_error;
    }
    file << text;
  }
  return outcome.status;
}

}  // namespace starinv::cli
