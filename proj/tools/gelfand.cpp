// Copyright 2026 The gelfand Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// gelfand: command-line front end.
//
//   gelfand enumerate --family tl --k 4 [--rank 2 --fixed 2]
//   gelfand multiply  --family brauer --k 2 --lhs "1 2|-1 -2" --rhs "1 2|-1 -2"
//   gelfand model     --family partition --k 2 --rank 1 --fixed 1 --diagram "1 -2 | 2 -1"
//   gelfand character --family partition --k 2 --diagram "1 -2 | 2 -1"
//   gelfand verify    --family tl --max-k 5
//   gelfand counts    --family partition --max-k 4 --format csv
//   gelfand bijection --k 11 --subset 3,4,8,9,11
//
// Exit status: 0 ok, 1 a verification failed, 2 bad usage or input.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "gelfand/gelfand.hpp"
#include "gelfand/io.hpp"

using namespace gelfand;
using io::json;

namespace {

constexpr const char* kSchema = "gelfand/1";

struct Opts {
  std::string family = "partition";
  int k = 2;
  int max_k = 4;
  std::optional<int> rank, fixed;
  std::string x;  // empty: keep coefficients symbolic
  std::string format = "text";
  std::string out;
  std::uint64_t seed = 20260101;
  std::string mode = "exhaustive";
  std::string lhs, rhs, diagram;
  std::vector<int> subset;
};

json tagged(const std::string& kind, json body) {
  body["schema"] = kSchema;
  body["kind"] = kind;
  return body;
}

std::string coeff_text(const Poly& c, const Opts& o) {
  return o.x.empty() ? c.str() : to_string(c.evaluate(parse_rational(o.x)));
}

int run_enumerate(const Opts& o, std::ostream& os) {
  Family fam = parse_family(o.family);
  std::vector<Diagram> ds;
  if (o.rank || o.fixed) {
    if (!o.rank || !o.fixed) throw ValidationError("--rank and --fixed go together");
    ds = enumerate_symmetric(fam, o.k, *o.rank, *o.fixed).diagrams;
  } else {
    ds = enumerate(fam, o.k);
  }
  if (o.format == "json") {
    json list = json::array();
    for (const auto& d : ds) list.push_back(to_text(d));
    json j{{"family", family_name(fam)}, {"k", o.k}, {"count", ds.size()}, {"diagrams", list}};
    if (o.rank) j["rank"] = *o.rank, j["fixed"] = *o.fixed;
    os << tagged("enumerate", j).dump(2) << "\n";
  } else if (o.format == "csv") {
    os << "index,diagram\n";
    for (size_t i = 0; i < ds.size(); ++i) os << i << "," << io::csv_field(to_text(ds[i])) << "\n";
  } else {
    for (const auto& d : ds) os << to_text(d) << "\n";
    os << "count " << ds.size() << "\n";
  }
  return 0;
}

int run_multiply(const Opts& o, std::ostream& os) {
  Family fam = parse_family(o.family);
  AlgebraElement p = multiply(fam, parse_diagram(o.lhs, o.k), parse_diagram(o.rhs, o.k));
  if (o.format == "json") {
    json j = io::to_json(p);
    if (!o.x.empty()) j["x"] = o.x;
    os << tagged("element", j).dump(2) << "\n";
  } else if (o.format == "csv") {
    os << "coefficient,diagram\n";
    for (const auto& [d, c] : p.terms()) os << io::csv_field(coeff_text(c, o)) << "," << io::csv_field(to_text(d)) << "\n";
  } else {
    if (p.terms().empty()) os << "0\n";
    for (const auto& [d, c] : p.terms()) os << coeff_text(c, o) << "  " << to_text(d) << "\n";
  }
  return 0;
}

template <class M>
void emit_matrix(const M& m, const Opts& o, std::ostream& os) {
  if (o.format == "json") {
    os << tagged("matrix", io::to_json(m)).dump(2) << "\n";
  } else if (o.format == "csv") {
    os << io::to_csv(m);
  } else {
    const auto& b = *m.basis;
    os << family_name(b.family) << " k=" << b.k << " block (" << b.r << "," << b.f << "), dimension " << b.size()
       << "\n";
    for (int i = 0; i < b.size(); ++i) os << "  [" << i << "] " << to_text(b.diagrams[i]) << "\n";
    for (int i = 0; i < m.entries.size(); ++i)
      for (const auto& [c, v] : m.entries.row(i)) os << "  (" << i << "," << c << ") " << io::value_text(v) << "\n";
  }
}

int run_model(const Opts& o, std::ostream& os) {
  if (!o.rank || !o.fixed) throw ValidationError("model needs --rank and --fixed");
  Family fam = parse_family(o.family);
  auto basis = std::make_shared<const SymmetricBasis>(enumerate_symmetric(fam, o.k, *o.rank, *o.fixed));
  RepMatrix m = representation_matrix(basis, parse_diagram(o.diagram, o.k));
  if (o.x.empty())
    emit_matrix(m, o, os);
  else
    emit_matrix(specialize(m, parse_rational(o.x)), o, os);
  return 0;
}

int run_character(const Opts& o, std::ostream& os) {
  Family fam = parse_family(o.family);
  Diagram d = parse_diagram(o.diagram, o.k);
  std::vector<std::pair<std::pair<int, int>, Poly>> rows;
  Poly total;
  for (const auto& [key, b] : symmetric_bases(fam, o.k)) {
    if ((o.rank && key.first != *o.rank) || (o.fixed && key.second != *o.fixed)) continue;
    Poly c = model_character(b, d);
    total += c;
    rows.emplace_back(key, c);
  }
  if (o.format == "json") {
    json blocks = json::array();
    for (const auto& [key, c] : rows)
      blocks.push_back(json{{"r", key.first}, {"f", key.second}, {"value", o.x.empty() ? io::to_json(c) : json(coeff_text(c, o))}});
    json j{{"family", family_name(fam)}, {"k", o.k}, {"diagram", to_text(d)}, {"blocks", blocks},
           {"total", o.x.empty() ? io::to_json(total) : json(coeff_text(total, o))}};
    os << tagged("character", j).dump(2) << "\n";
  } else if (o.format == "csv") {
    os << "r,f,value\n";
    for (const auto& [key, c] : rows) os << key.first << "," << key.second << "," << io::csv_field(coeff_text(c, o)) << "\n";
  } else {
    for (const auto& [key, c] : rows) os << "(" << key.first << "," << key.second << ")  " << coeff_text(c, o) << "\n";
    os << "total  " << coeff_text(total, o) << "\n";
  }
  return 0;
}

int run_verify(const Opts& o, std::ostream& os, bool family_given) {
  Config cfg = family_given ? Config::for_family(parse_family(o.family), o.max_k) : Config::acceptance();
  cfg.seed = o.seed;
  if (o.mode != "exhaustive" && o.mode != "sampled") throw ValidationError("--mode is exhaustive or sampled");
  const bool sampled = o.mode == "sampled";
  std::vector<std::pair<Family, int>> deferred;
  if (sampled)
    for (auto& [fam, b] : cfg.families) {
      deferred.emplace_back(fam, b.module_axiom);
      b.module_axiom = -1;
    }
  auto reps = run_all(cfg);
  for (auto [fam, top] : deferred)
    for (int k = 1; k <= top + 1; ++k)
      reps.push_back(check_module_axiom(fam, k, Mode::Sampled, cfg.seed, cfg.samples));

  if (o.format == "json") {
    json list = json::array();
    for (const auto& r : reps) list.push_back(io::to_json(r));
    os << tagged("report", json{{"pass", all_pass(reps)}, {"checks", list}}).dump(2) << "\n";
  } else if (o.format == "csv") {
    os << "check,family,k,status,ms,witness\n";
    for (const auto& r : reps)
      os << r.check << "," << family_name(r.family) << "," << r.k << "," << (r.pass ? "pass" : "fail") << ","
         << int(r.ms) << "," << io::csv_field(r.witness) << "\n";
  } else {
    for (const auto& r : reps) os << io::to_text(r) << "\n";
  }
  return all_pass(reps) ? 0 : 1;
}

int run_counts(const Opts& o, std::ostream& os) {
  Family fam = parse_family(o.family);
  struct Row {
    int k;
    long long symmetric;
    std::optional<BigInt> predicted;
  };
  std::vector<Row> rows;
  for (int k = 0; k <= o.max_k; ++k) {
    long long n = 0;
    for_each_symmetric(fam, k, [&](const Diagram&) { ++n; });
    rows.push_back({k, n, predicted_total(fam, k)});
  }
  auto pred = [](const Row& r) { return r.predicted ? r.predicted->str() : std::string(); };
  if (o.format == "json") {
    json list = json::array();
    for (const auto& r : rows)
      list.push_back(json{{"k", r.k}, {"symmetric", r.symmetric},
                          {"predicted", r.predicted ? io::bigint_to_json(*r.predicted) : json(nullptr)}});
    os << tagged("counts", json{{"family", family_name(fam)}, {"rows", list}}).dump(2) << "\n";
  } else if (o.format == "csv") {
    os << "k,symmetric,predicted\n";
    for (const auto& r : rows) os << r.k << "," << r.symmetric << "," << pred(r) << "\n";
  } else {
    for (const auto& r : rows) os << "k=" << r.k << "  " << r.symmetric << (r.predicted ? "  predicted " + pred(r) : "") << "\n";
  }
  for (const auto& r : rows)
    if (r.predicted && BigInt(r.symmetric) != *r.predicted) return 1;
  return 0;
}

int run_bijection(const Opts& o, std::ostream& os, bool have_subset) {
  if (have_subset) {
    Diagram d = tl_diagram(std::set<int>(o.subset.begin(), o.subset.end()), o.k);
    if (o.format == "json")
      os << tagged("diagram", io::to_json(d)).dump(2) << "\n";
    else
      os << to_text(d) << "\n";
    return 0;
  }
  if (o.diagram.empty()) throw ValidationError("bijection needs --subset or --diagram");
  auto L = tl_subset(parse_diagram(o.diagram, o.k));
  if (o.format == "json") {
    os << tagged("subset", json{{"k", o.k}, {"subset", L}}).dump(2) << "\n";
  } else {
    bool first = true;
    for (int i : L) os << (first ? "" : ",") << i, first = false;
    os << "\n";
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Gelfand models of diagram algebras"};
  app.require_subcommand(1);
  Opts o;

  auto family = [&](CLI::App* s) { s->add_option("--family", o.family, "partition, brauer, tl, rook, ..."); };
  auto k = [&](CLI::App* s) { s->add_option("--k", o.k, "number of columns")->check(CLI::NonNegativeNumber); };
  auto fmt = [&](CLI::App* s) {
    s->add_option("--format", o.format, "json, csv or text")->check(CLI::IsMember({"json", "csv", "text"}));
    s->add_option("--out", o.out, "write here instead of stdout");
  };
  auto block = [&](CLI::App* s) {
    s->add_option("--rank", o.rank, "propagating blocks r");
    s->add_option("--fixed", o.fixed, "fixed blocks f");
  };
  auto x = [&](CLI::App* s) { s->add_option("--x", o.x, "specialize the parameter, p/q"); };

  auto* en = app.add_subcommand("enumerate", "list diagrams, or one symmetric block");
  family(en), k(en), block(en), fmt(en);

  auto* mu = app.add_subcommand("multiply", "product of two diagrams");
  family(mu), k(mu), x(mu), fmt(mu);
  mu->add_option("--lhs", o.lhs)->required();
  mu->add_option("--rhs", o.rhs)->required();

  auto* mo = app.add_subcommand("model", "matrix of a diagram on one graded block");
  family(mo), k(mo), block(mo), x(mo), fmt(mo);
  mo->add_option("--diagram", o.diagram)->required();

  auto* ch = app.add_subcommand("character", "model character of a diagram");
  family(ch), k(ch), block(ch), x(ch), fmt(ch);
  ch->add_option("--diagram", o.diagram)->required();

  auto* ve = app.add_subcommand("verify", "run the checks; every family at acceptance bounds if --family is absent");
  family(ve), fmt(ve);
  ve->add_option("--max-k", o.max_k)->check(CLI::NonNegativeNumber);
  ve->add_option("--seed", o.seed);
  ve->add_option("--mode", o.mode, "exhaustive or sampled")->check(CLI::IsMember({"exhaustive", "sampled"}));

  auto* co = app.add_subcommand("counts", "symmetric diagram totals against the closed forms");
  family(co), fmt(co);
  co->add_option("--max-k", o.max_k)->check(CLI::NonNegativeNumber);

  auto* bi = app.add_subcommand("bijection", "Temperley-Lieb subset <-> symmetric diagram");
  k(bi), fmt(bi);
  auto* subset = bi->add_option("--subset", o.subset, "comma separated")->delimiter(',');
  bi->add_option("--diagram", o.diagram);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  std::ostringstream buf;
  int status = 0;
  try {
    if (*en) status = run_enumerate(o, buf);
    else if (*mu) status = run_multiply(o, buf);
    else if (*mo) status = run_model(o, buf);
    else if (*ch) status = run_character(o, buf);
    else if (*ve) status = run_verify(o, buf, ve->count("--family") > 0);
    else if (*co) status = run_counts(o, buf);
    else if (*bi) status = run_bijection(o, buf, subset->count() > 0);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }

  if (o.out.empty()) {
    std::cout << buf.str();
  } else {
    std::ofstream f(o.out);
    if (!f) {
      std::cerr << "error: cannot write " << o.out << "\n";
      return 2;
    }
    f << buf.str();
  }
  return status;
}
