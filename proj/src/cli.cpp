#include "sympms/cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "sympms/io.hpp"

namespace sympms {

namespace {

json read_payload(const std::string& in_path, std::istream& in) {
  std::string text;
  if (!in_path.empty()) {
    std::ifstream f(in_path);
    if (!f) throw std::invalid_argument("malformed input: cannot open " + in_path);
    std::stringstream ss;
    ss << f.rdbuf();
    text = ss.str();
  } else {
    std::stringstream ss;
    ss << in.rdbuf();
    text = ss.str();
  }
  json j = json::parse(text, nullptr, false);
  if (j.is_discarded()) throw std::invalid_argument("malformed input: invalid JSON");
  return j;
}

void emit(std::ostream& out, const json& j) { out << j.dump() << "\n"; }

void write_trace_lines(const std::string& path, const ReductionTrace& trace,
                       TraceLevel level) {
  std::ofstream f(path);
  if (!f) throw std::invalid_argument("malformed input: cannot open " + path);
  for (const auto& node : trace.steps)
    f << trace_node_to_json(node, level).dump() << "\n";
}

int dispatch(const std::vector<std::string>& args, std::istream& in,
             std::ostream& out) {
  CLI::App app{"exact symplectic modular symbol toolkit"};
  app.require_subcommand(1);

  std::string in_path;
  std::string trace_level_str = "steps";
  std::string trace_out;
  bool verify_after = false;

  auto add_io = [&](CLI::App* cmd) {
    cmd->add_option("--in", in_path, "input file (stdin when absent)");
  };

  CLI::App* cmd_reduce = app.add_subcommand("reduce", "rewrite a symbol as unimodular terms");
  add_io(cmd_reduce);
  cmd_reduce->add_option("--trace", trace_level_str, "off|steps|full");
  cmd_reduce->add_option("--trace-out", trace_out, "persist trace as JSON-lines");
  cmd_reduce->add_flag("--verify", verify_after, "check the chamber chains afterwards");

  CLI::App* cmd_relation = app.add_subcommand("relation", "emit the subdivision relation");
  add_io(cmd_relation);

  CLI::App* cmd_hnf = app.add_subcommand("hnf", "symplectic Hermite form of a matrix");
  add_io(cmd_hnf);

  CLI::App* cmd_candidate = app.add_subcommand("candidate", "candidate vector for a symbol");
  add_io(cmd_candidate);

  CLI::App* cmd_depth = app.add_subcommand("depth", "depth of a symbol");
  add_io(cmd_depth);

  CLI::App* cmd_verify = app.add_subcommand("verify", "compare a symbol against a relation");
  add_io(cmd_verify);

  CLI::App* cmd_check = app.add_subcommand("check-id", "three-point identity on constructed points");
  add_io(cmd_check);

  std::string ring_str = "Z", mode_str = "sp-member";
  int n_opt = 2;
  long bound = 10;
  uint64_t seed = 0;
  CLI::App* cmd_random = app.add_subcommand("random", "seeded random instance");
  cmd_random->add_option("--ring", ring_str, "Z|Z[i]|Z[w]");
  cmd_random->add_option("--n", n_opt, "rank parameter");
  cmd_random->add_option("--seed", seed, "64-bit seed");
  cmd_random->add_option("--bound", bound, "max entry norm");
  cmd_random->add_option("--mode", mode_str, "sp-member|isotropy-matrix|deep-symbol");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  }

  if (cmd_reduce->parsed()) {
    TraceLevel level = trace_level_from_string(trace_level_str);
    SymplecticSymbol s = symbol_from_json(read_payload(in_path, in));
    ReduceResult res = reduce(s);
    if (verify_after) {
      ChamberChain got = expand_relation(res.relation);
      if (!chains_equal(got, expand(normalize(s))))
        throw DomainError("verify-failed", "output chain differs from the input chain");
    }
    if (!trace_out.empty()) write_trace_lines(trace_out, res.trace, level);
    json o = json::object();
    o["terms"] = relation_to_json(res.relation)["terms"];
    o["trace"] = trace_to_json(res.trace, level);
    emit(out, o);
    return 0;
  }
  if (cmd_relation->parsed()) {
    json payload = read_payload(in_path, in);
    if (!payload.contains("symbol") || !payload.contains("x"))
      throw std::invalid_argument("malformed input: relation needs {symbol, x}");
    SymplecticSymbol s = symbol_from_json(payload["symbol"]);
    RVec x = vector_from_json(s.space().ring, payload["x"]);
    SignedRelation rel = theorem1_relation(normalize(s), x);
    emit(out, relation_to_json(rel));
    return 0;
  }
  if (cmd_hnf->parsed()) {
    RMatrix m = matrix_from_json(read_payload(in_path, in));
    if (m.rows() != m.cols() || m.rows() % 2 != 0 || m.rows() == 0)
      throw DomainError("dimension-mismatch", "hnf needs a square 2n x 2n matrix");
    SymplecticSpace sp{m.rows() / 2, m.ring()};
    HnfResult r = symplectic_hnf(sp, m);
    json o = json::object();
    o["gamma"] = matrix_to_json(r.gamma);
    o["t"] = matrix_to_json(r.t);
    emit(out, o);
    return 0;
  }
  if (cmd_candidate->parsed()) {
    SymplecticSymbol s = symbol_from_json(read_payload(in_path, in));
    emit(out, candidate_to_json(find_candidate(normalize(s))));
    return 0;
  }
  if (cmd_depth->parsed()) {
    SymplecticSymbol s = symbol_from_json(read_payload(in_path, in));
    json o = json::object();
    o["depth"] = zint_to_json(depth(s.space(), normalize(s).matrix()));
    emit(out, o);
    return 0;
  }
  if (cmd_verify->parsed()) {
    json payload = read_payload(in_path, in);
    if (!payload.contains("base") || !payload.contains("relation"))
      throw std::invalid_argument("malformed input: verify needs {base, relation}");
    SymplecticSymbol base = symbol_from_json(payload["base"]);
    SignedRelation rel = relation_from_json(payload["relation"]);
    json o = json::object();
    o["equal"] = chains_equal(expand(base), expand_relation(rel));
    emit(out, o);
    return 0;
  }
  if (cmd_check->parsed()) {
    json payload = read_payload(in_path, in);
    if (!payload.contains("symbol") || !payload.contains("x"))
      throw std::invalid_argument("malformed input: check-id needs {symbol, x}");
    SymplecticSymbol s = normalize(symbol_from_json(payload["symbol"]));
    RVec x = vector_from_json(s.space().ring, payload["x"]);
    SubdivisionData data = subdivision(s, x);
    json o = json::object();
    if (payload.contains("triple")) {
      const json& t = payload["triple"];
      if (!t.is_array() || t.size() != 3)
        throw std::invalid_argument("malformed input: triple must be [i, j, k]");
      o["holds"] = check_collinearity(data, t[0].get<int>(), t[1].get<int>(),
                                      t[2].get<int>());
      o["checked"] = 1;
    } else {
      bool holds = true;
      int checked = 0;
      std::vector<int> idx = all_indices(s.space());
      for (size_t a = 0; a < idx.size(); ++a)
        for (size_t b = a + 1; b < idx.size(); ++b)
          for (size_t c = b + 1; c < idx.size(); ++c) {
            int i = idx[a], j = idx[b], k = idx[c];
            if (i == bar(j) || j == bar(k) || i == bar(k)) continue;
            int inside = (data.in_d_x(i) ? 1 : 0) + (data.in_d_x(j) ? 1 : 0) +
                         (data.in_d_x(k) ? 1 : 0);
            if (inside > 1) continue;
            holds = holds && check_collinearity(data, i, j, k);
            ++checked;
          }
      o["holds"] = holds;
      o["checked"] = checked;
    }
    emit(out, o);
    return 0;
  }
  if (cmd_random->parsed()) {
    RandomSpec spec;
    spec.ring = ring_from_tag(ring_str);
    if (n_opt < 1) throw std::invalid_argument("malformed input: n must be positive");
    spec.n = n_opt;
    spec.entry_bound = bound;
    spec.seed = seed;
    spec.mode = random_mode_from_string(mode_str);
    auto inst = random_instance(spec);
    if (std::holds_alternative<RMatrix>(inst))
      emit(out, matrix_to_json(std::get<RMatrix>(inst)));
    else
      emit(out, symbol_to_json(std::get<SymplecticSymbol>(inst)));
    return 0;
  }
  throw std::invalid_argument("malformed input: unknown command");
}

}  // namespace

int run_command(const std::vector<std::string>& args, std::istream& in,
                std::ostream& out, std::ostream& err) {
  try {
    return dispatch(args, in, out);
  } catch (const CLI::ParseError& e) {
    json o = json::object();
    o["error"] = "bad-arguments";
    o["detail"] = e.what();
    out << o.dump() << "\n";
    err << e.what() << "\n";
    return 1;
  } catch (const DomainError& e) {
    json o = json::object();
    o["error"] = e.code();
    o["detail"] = e.what();
    out << o.dump() << "\n";
    err << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    json o = json::object();
    o["error"] = "malformed-input";
    o["detail"] = e.what();
    out << o.dump() << "\n";
    err << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    json o = json::object();
    o["error"] = "internal";
    o["detail"] = e.what();
    out << o.dump() << "\n";
    err << e.what() << "\n";
    return 3;
  }
}

}  // namespace sympms
