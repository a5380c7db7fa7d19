#include <CLI11.hpp>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <string>

#include "quiverlab/analysis.hpp"
#include "quiverlab/fixtures.hpp"
#include "quiverlab/harness.hpp"
#include "quiverlab/json_io.hpp"
#include "quiverlab/ktheory.hpp"
#include "quiverlab/lpa.hpp"
#include "quiverlab/presentation.hpp"
#include "quiverlab/quiver.hpp"

using namespace quiverlab;

namespace {

constexpr int kOk = 0;
constexpr int kFalse = 1;      // property false / invariant mismatch
constexpr int kParseError = 2;
constexpr int kPrecondition = 3;

bool g_pretty = false;

void emit(const json& j) {
  if (g_pretty)
    std::cout << j.dump(2) << "\n";
  else
    std::cout << j.dump() << "\n";
}

json summand_to_json(const Summand& s) {
  json j;
  j["ring"] = s.ring == RingKind::OverK ? "K" : "Laurent";
  if (s.infinite)
    j["size"] = "inf";
  else
    j["size"] = s.size;
  j["origin"] = s.origin;
  return j;
}

json decomposition_to_json(const Decomposition& d) {
  json arr = json::array();
  for (const auto& s : d.summands) arr.push_back(summand_to_json(s));
  return arr;
}

json load_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open file: " + path);
  json j;
  in >> j;
  return j;
}

IntMatrix load_matrix(const std::string& path) {
  return matrix_from_json(load_json(path));
}

std::uint64_t default_seed() {
  if (const char* env = std::getenv("QUIVERLAB_SEED"))
    return std::strtoull(env, nullptr, 10);
  return 42;
}

json invariant_to_json(const GradedIsoInvariant& inv) {
  json arr = json::array();
  for (const auto& l : inv.sink_lists) arr.push_back(l);
  return arr;
}

void write_fixture(const std::string& dir, const Quiver& q,
                   const std::string& file, json& index) {
  std::string path = dir + "/" + file;
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << quiver_to_json(q).dump(2) << "\n";
  index.push_back(path);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"quiverlab: Kronecker squares of quivers and invariants of "
               "their Leavitt path algebras"};
  app.require_subcommand(1);
  app.add_flag("--pretty", g_pretty, "indent JSON output");

  std::string in_a, in_b, partition_path, out_dir = "fixtures";
  std::string w_a, w_b, w_r, w_s;
  long degree = 0;
  unsigned long lag = 1;
  bool want_dot = false, do_lift = false, cross = false, show_text = false;
  std::string suite = "preservation";
  std::size_t trials = 200;
  std::uint64_t seed = default_seed();

  auto* validate = app.add_subcommand("validate", "parse and echo a quiver");
  validate->add_option("input", in_a)->required();
  validate->add_flag("--dot", want_dot, "emit DOT instead of JSON");

  auto* kron = app.add_subcommand(
      "kron", "Kronecker square (one input) or product (two inputs)");
  kron->add_option("input", in_a)->required();
  kron->add_option("input2", in_b);
  kron->add_flag("--dot", want_dot);

  auto* outsplit = app.add_subcommand("outsplit", "out-split a quiver");
  outsplit->add_option("input", in_a)->required();
  outsplit->add_option("--partition", partition_path)->required();
  outsplit->add_flag("--dot", want_dot);

  auto* props = app.add_subcommand("props", "ring-property report");
  props->add_option("input", in_a)->required();

  auto* census = app.add_subcommand("census", "degree census");
  census->add_option("input", in_a)->required();

  auto* k0 = app.add_subcommand("k0", "K0 group");
  k0->add_option("input", in_a)->required();

  auto* decomp = app.add_subcommand("decompose",
                                    "locally-finite decomposition");
  decomp->add_option("input", in_a)->required();

  auto* socle = app.add_subcommand("socle", "socle decomposition");
  socle->add_option("input", in_a)->required();

  auto* dim = app.add_subcommand("dim", "graded-component dimension");
  dim->add_option("input", in_a)->required();
  dim->add_option("--degree", degree);
  dim->add_option("--cross", in_b)
      ->description("second quiver: cross-product dimension");

  auto* gk = app.add_subcommand("gk", "Gelfand-Kirillov dimension");
  gk->add_option("input", in_a)->required();

  auto* gradediso =
      app.add_subcommand("gradediso", "graded-isomorphism invariant");
  gradediso->add_option("input", in_a)->required();
  gradediso->add_option("input2", in_b)->required();

  auto* conjecture = app.add_subcommand("conjecture", "Conjecture 2 check");
  conjecture->add_option("input", in_a)->required();

  auto* shifteq = app.add_subcommand("shifteq",
                                     "verify a shift-equivalence witness");
  shifteq->add_option("--a", w_a)->required();
  shifteq->add_option("--b", w_b)->required();
  shifteq->add_option("--r", w_r)->required();
  shifteq->add_option("--s", w_s)->required();
  shifteq->add_option("--l", lag);
  shifteq->add_flag("--lift", do_lift, "emit the Kronecker-lifted witness");

  auto* pres = app.add_subcommand("presentations",
                                  "match the two presentations of L(Q^)");
  pres->add_option("input", in_a)->required();
  pres->add_flag("--text", show_text, "include presentation text");

  auto* proptest = app.add_subcommand("proptest", "run a property suite");
  proptest->add_option("--suite", suite);
  proptest->add_option("--trials", trials);
  proptest->add_option("--seed", seed);

  auto* fixtures_cmd =
      app.add_subcommand("fixtures", "write the bundled quivers");
  fixtures_cmd->add_option("dir", out_dir);

  CLI11_PARSE(app, argc, argv);

  // load phase: any failure here is a parse/input error
  Quiver qa, qb;
  OutSplitPartition part;
  ShiftEquivalenceWitness wit;
  try {
    if (validate->parsed() || kron->parsed() || outsplit->parsed() ||
        props->parsed() || census->parsed() || k0->parsed() ||
        decomp->parsed() || socle->parsed() || dim->parsed() ||
        gk->parsed() || gradediso->parsed() || conjecture->parsed() ||
        pres->parsed())
      qa = load_quiver(in_a);
    if (!in_b.empty() && (kron->parsed() || dim->parsed() ||
                          gradediso->parsed()))
      qb = load_quiver(in_b);
    if (outsplit->parsed())
      part = partition_from_json(load_json(partition_path));
    if (shifteq->parsed())
      wit = {load_matrix(w_a), load_matrix(w_b), load_matrix(w_r),
             load_matrix(w_s), lag};
  } catch (const std::exception& ex) {
    emit({{"error", ex.what()}});
    return kParseError;
  }

  try {
    if (validate->parsed()) {
      if (want_dot) {
        std::cout << to_dot(qa);
        return kOk;
      }
      emit(quiver_to_json(qa));
      return kOk;
    }
    if (kron->parsed()) {
      Quiver r = in_b.empty() ? kronecker_square(qa)
                              : kronecker_product(qa, qb);
      if (want_dot)
        std::cout << to_dot(r);
      else
        emit(quiver_to_json(r));
      return kOk;
    }
    if (outsplit->parsed()) {
      Quiver r = out_split(qa, part);
      if (want_dot)
        std::cout << to_dot(r);
      else
        emit(quiver_to_json(r));
      return kOk;
    }
    if (props->parsed()) {
      RingProperties p = ring_properties(qa);
      emit({{"vonNeumannRegular", p.vonNeumannRegular},
            {"noetherian", p.noetherian},
            {"artinian", p.artinian},
            {"locallyFinite", p.locallyFinite},
            {"prime", p.prime},
            {"primitive", p.primitive},
            {"stronglyGraded", p.stronglyGraded}});
      return kOk;
    }
    if (census->parsed()) {
      DegreeCensus c = degree_census(qa);
      emit({{"sinks", c.sinks},
            {"sources", c.sources},
            {"isolated", c.isolated},
            {"regular", c.regular}});
      return kOk;
    }
    if (k0->parsed()) {
      K0Group g = k0_group(qa);
      json torsion = json::array();
      for (const auto& t : g.torsion) torsion.push_back(t.get_str());
      emit({{"freeRank", g.freeRank}, {"torsion", torsion}});
      return kOk;
    }
    if (decomp->parsed()) {
      emit(decomposition_to_json(decompose(qa)));
      return kOk;
    }
    if (socle->parsed()) {
      SocleResult r = socle_decomposition(qa);
      emit({{"summands", decomposition_to_json(r.summands)},
            {"socleSet", r.socleSet.vertices},
            {"quotient", quiver_to_json(r.quotient)}});
      return kOk;
    }
    if (dim->parsed()) {
      std::uint64_t d = in_b.empty() ? dim_graded(qa, degree)
                                     : cross_product_dim(qa, qb, degree);
      (void)cross;
      emit({{"dim", d}, {"degree", degree}});
      return kOk;
    }
    if (gk->parsed()) {
      GKDim g = gk_dimension(qa);
      if (g.infinite)
        emit({{"gk", "inf"}});
      else
        emit({{"gk", g.value}});
      return kOk;
    }
    if (gradediso->parsed()) {
      GradedIsoInvariant ia = graded_iso_invariant(qa);
      GradedIsoInvariant ib = graded_iso_invariant(qb);
      bool eq = ia == ib;
      emit({{"gradedIso", eq},
            {"invariantA", invariant_to_json(ia)},
            {"invariantB", invariant_to_json(ib)}});
      return eq ? kOk : kFalse;
    }
    if (conjecture->parsed()) {
      ConjectureReport r = conjecture_check(qa);
      emit(conjecture_report_to_json(r));
      return r.verdict == Verdict::Fail ? kFalse : kOk;
    }
    if (shifteq->parsed()) {
      auto bad = verify_shift_equivalence(wit);
      json out = {{"valid", bad.empty()}, {"violations", bad}};
      if (do_lift && bad.empty()) {
        ShiftEquivalenceWitness l = lift_shift_equivalence(wit);
        out["lift"] = {{"A", matrix_to_json(l.A)},
                       {"B", matrix_to_json(l.B)},
                       {"R", matrix_to_json(l.R)},
                       {"S", matrix_to_json(l.S)},
                       {"l", l.lag}};
      }
      emit(out);
      return bad.empty() ? kOk : kFalse;
    }
    if (pres->parsed()) {
      Presentation a = lpa_presentation(qa);
      Presentation b = face_quotient_presentation(qa);
      MatchResult m = presentations_match(a, b);
      json out = {{"match", m.match}, {"diffs", m.diffs}};
      if (show_text) {
        out["lpa"] = a.to_text();
        out["faceQuotient"] = b.to_text();
      }
      emit(out);
      return m.match ? kOk : kFalse;
    }
    if (proptest->parsed()) {
      json report = run_suite(suite, trials, seed);
      emit(report);
      return report["failures"].empty() ? kOk : kFalse;
    }
    if (fixtures_cmd->parsed()) {
      json index = json::array();
      for (const Quiver& q : fixtures::all()) {
        write_fixture(out_dir, q, q.name() + ".json", index);
        write_fixture(out_dir, kronecker_square(q), q.name() + ".hat.json",
                      index);
      }
      emit({{"written", index}});
      return kOk;
    }
  } catch (const std::exception& ex) {
    emit({{"error", ex.what()}});
    return kPrecondition;
  }
  return kParseError;
}
