// Acceptance suite. Runs every stated criterion at its stated tolerance and
// prints one pass/fail line per criterion; exits nonzero if any fail.
//
// Needs the CLI binary and fixture corpus; paths are baked in at configure
// time and can be overridden with QMUT_CLI / QMUT_FIXTURES / QMUT_CLI_SCRIPT
// in the environment.

#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "generators.hpp"
#include "oracle.hpp"
#include "qmut/canonical.hpp"
#include "qmut/decide.hpp"
#include "qmut/explore.hpp"
#include "qmut/textio.hpp"

using namespace qmut;

namespace {

std::string env_or(const char* name, const char* fallback) {
  const char* value = std::getenv(name);
  return value ? value : fallback;
}

struct Outcome {
  bool pass = true;
  std::string detail;

  void fail(const std::string& why) {
    if (pass) detail = why;  // keep the first reason
    pass = false;
  }
};

// ---------------------------------------------------------------------------
// 1. Involutivity: mutating twice at the same vertex restores the quiver
//    entrywise, over 10^4 random quivers with n <= 8 and entries in [-5, 5].

Outcome involutivity() {
  Outcome out;
  std::mt19937_64 rng(0xACCE0001);
  for (int trial = 0; trial < 10000; ++trial) {
    const int n = gen::rand_int(rng, 1, 8);
    const Quiver q = gen::random_quiver(rng, n, 5);
    const int k = gen::rand_int(rng, 0, n - 1);
    if (mutate(mutate(q, k), k) != q) {
      out.fail("double mutation changed a quiver at trial " +
               std::to_string(trial));
      break;
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// 2. Closure: on the same sample, every mutation output satisfies the
//    loop-free / two-cycle-free invariants.

Outcome closure() {
  Outcome out;
  std::mt19937_64 rng(0xACCE0001);  // identical sample to criterion 1
  for (int trial = 0; trial < 10000; ++trial) {
    const int n = gen::rand_int(rng, 1, 8);
    const Quiver q = gen::random_quiver(rng, n, 5);
    const int k = gen::rand_int(rng, 0, n - 1);
    if (validate(mutate(q, k))) {
      out.fail("mutation output violated invariants at trial " +
               std::to_string(trial));
      break;
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// 3. The closed-form matrix update agrees with the literal three-step graph
//    procedure: exhaustively for n = 3 with entries in [-4, 4], plus 10^4
//    random quivers with n <= 5.

Outcome closed_form_equivalence() {
  Outcome out;
  for (Entry e01 = -4; e01 <= 4 && out.pass; ++e01) {
    for (Entry e02 = -4; e02 <= 4 && out.pass; ++e02) {
      for (Entry e12 = -4; e12 <= 4 && out.pass; ++e12) {
        Quiver q(3);
        q.set_arrows(0, 1, e01);
        q.set_arrows(0, 2, e02);
        q.set_arrows(1, 2, e12);
        for (int k = 0; k < 3; ++k) {
          if (mutate(q, k) != oracle::mutate_three_step(q, k)) {
            out.fail("closed form diverged on the exhaustive triangle scan");
            break;
          }
        }
      }
    }
  }
  std::mt19937_64 rng(0xACCE0003);
  for (int trial = 0; trial < 10000 && out.pass; ++trial) {
    const int n = gen::rand_int(rng, 1, 5);
    const Quiver q = gen::random_quiver(rng, n, 4);
    const int k = gen::rand_int(rng, 0, n - 1);
    if (mutate(q, k) != oracle::mutate_three_step(q, k))
      out.fail("closed form diverged at random trial " +
               std::to_string(trial));
  }
  return out;
}

// ---------------------------------------------------------------------------
// 4. The doubled-triangle fixture: a one-element complete class, a checked
//    three-vertex certificate with weights (2,2,2) and constant 4, and
//    mutation-acyclic two-vertex subquivers.

Outcome markov_fixture() {
  Outcome out;
  const Quiver markov = gen::markov_quiver();

  const ClassReport report = explore(markov);
  if (!report.complete || report.representatives.size() != 1)
    out.fail("class is not a complete singleton");

  const Verdict verdict = decide(markov);
  if (verdict.kind != Verdict::Kind::MutationCyclic ||
      !verdict.certificate ||
      verdict.certificate->kind != Certificate::Kind::ThreeVertexInvariant) {
    out.fail("expected a three-vertex-invariant certificate");
  } else {
    const Certificate& cert = *verdict.certificate;
    if (cert.weights != std::array<Entry, 3>{2, 2, 2} || cert.constant != 4)
      out.fail("certificate weights/constant wrong");
    if (!check_certificate(markov, cert))
      out.fail("certificate does not check");
  }

  for (const std::vector<int>& pair :
       {std::vector<int>{0, 1}, std::vector<int>{0, 2},
        std::vector<int>{1, 2}}) {
    if (decide(full_subquiver(markov, pair)).kind !=
        Verdict::Kind::MutationAcyclic) {
      out.fail("a two-vertex subquiver did not decide mutation-acyclic");
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// 5. The class of the A3 path has exactly the four forms the brute-force
//    enumerator finds.

Outcome a3_class() {
  Outcome out;
  const ClassReport report = explore(gen::path3());
  const auto expected = oracle::enumerate_class(gen::path3(), 100, 1000);
  if (!report.complete || !expected.complete)
    out.fail("either enumeration failed to complete");
  if (report.representatives.size() != 4)
    out.fail("expected 4 representatives, got " +
             std::to_string(report.representatives.size()));
  std::set<std::vector<Entry>> forms;
  for (const ClassEntry& entry : report.representatives)
    forms.insert(entry.form.matrix);
  if (forms != expected.forms) out.fail("form sets differ from the oracle");
  return out;
}

// ---------------------------------------------------------------------------
// 6. Triangle criterion validation: the certified test agrees with the
//    bounded semi-oracle on every cyclic triangle with weights in [1, 6],
//    and the invariant is unchanged by mutation for weights up to 10.

Outcome triangle_criterion() {
  Outcome out;
  for (Entry a = 1; a <= 6; ++a) {
    for (Entry b = 1; b <= 6; ++b) {
      for (Entry c = 1; c <= 6; ++c) {
        for (int mirror = 0; mirror < 2; ++mirror) {
          Quiver q(3);
          if (mirror == 0) {
            q.set_arrows(0, 1, a);
            q.set_arrows(1, 2, b);
            q.set_arrows(2, 0, c);
          } else {
            q.set_arrows(1, 0, a);
            q.set_arrows(2, 1, b);
            q.set_arrows(0, 2, c);
          }
          const Verdict verdict = decide_three_vertex(q);
          const bool certified_cyclic =
              verdict.kind == Verdict::Kind::MutationCyclic;
          const bool oracle_acyclic = oracle::finds_acyclic_within_bounds(q);
          if (certified_cyclic == oracle_acyclic) {
            out.fail("criterion and semi-oracle disagree on weights (" +
                     std::to_string(a) + "," + std::to_string(b) + "," +
                     std::to_string(c) + ")");
            return out;
          }
          if (certified_cyclic && !check_certificate(q, *verdict.certificate))
            out.fail("a produced certificate does not check");
          if (!certified_cyclic &&
              !is_acyclic(mutate_seq(q, verdict.witness)))
            out.fail("a produced witness does not replay to acyclic");
        }
      }
    }
  }

  for (Entry e01 = -10; e01 <= 10 && out.pass; ++e01) {
    for (Entry e12 = -10; e12 <= 10 && out.pass; ++e12) {
      for (Entry e20 = -10; e20 <= 10 && out.pass; ++e20) {
        Quiver q(3);
        q.set_arrows(0, 1, e01);
        q.set_arrows(1, 2, e12);
        q.set_arrows(2, 0, e20);
        const Entry invariant = markov_constant(q);
        for (int k = 0; k < 3; ++k) {
          if (markov_constant(mutate(q, k)) != invariant) {
            out.fail("invariant changed under mutation at (" +
                     std::to_string(e01) + "," + std::to_string(e12) + "," +
                     std::to_string(e20) + ")");
            break;
          }
        }
      }
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// 7. Subquivers of mutation-acyclic quivers are mutation-acyclic: 200
//    quivers built as random mutation words over random acyclic seeds, every
//    full subquiver decided, zero cyclic and zero unknown verdicts.

Outcome subquiver_property() {
  Outcome out;
  std::mt19937_64 rng(0xACCE0007);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = gen::rand_int(rng, 2, 5);
    Quiver q = gen::random_acyclic_quiver(rng, n, 2);
    const int steps = gen::rand_int(rng, 0, 8);
    for (int s = 0; s < steps; ++s) q = mutate(q, gen::rand_int(rng, 0, n - 1));

    for (int mask = 1; mask < (1 << n); ++mask) {
      std::vector<int> vs;
      for (int v = 0; v < n; ++v)
        if (mask & (1 << v)) vs.push_back(v);
      const Verdict verdict = decide(full_subquiver(q, vs));
      if (verdict.kind != Verdict::Kind::MutationAcyclic) {
        out.fail(std::string("subquiver verdict was ") +
                 (verdict.kind == Verdict::Kind::MutationCyclic ? "cyclic"
                                                                : "unknown") +
                 " at trial " + std::to_string(trial));
        return out;
      }
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// 8. Pruning soundness: planting the doubled triangle inside random quivers
//    on 5-7 vertices is caught by the subquiver scan, before any class
//    exploration, visible as stage 2 in the JSON report.

Outcome pruning_soundness() {
  Outcome out;
  std::mt19937_64 rng(0xACCE0008);
  for (int trial = 0; trial < 50; ++trial) {
    const int n = gen::rand_int(rng, 5, 7);
    Quiver q = gen::random_quiver(rng, n, 2);
    int t0 = gen::rand_int(rng, 0, n - 1);
    int t1 = gen::rand_int(rng, 0, n - 1);
    int t2 = gen::rand_int(rng, 0, n - 1);
    while (t1 == t0) t1 = gen::rand_int(rng, 0, n - 1);
    while (t2 == t0 || t2 == t1) t2 = gen::rand_int(rng, 0, n - 1);
    q.set_arrows(t0, t1, 2);
    q.set_arrows(t1, t2, 2);
    q.set_arrows(t2, t0, 2);

    const Verdict verdict = decide(q);
    if (verdict.kind != Verdict::Kind::MutationCyclic ||
        verdict.stage != 2 || !verdict.certificate ||
        verdict.certificate->kind != Certificate::Kind::CyclicSubquiver) {
      out.fail("planted triangle not pruned at trial " +
               std::to_string(trial));
      return out;
    }
    if (!check_certificate(q, *verdict.certificate)) {
      out.fail("pruning certificate does not check at trial " +
               std::to_string(trial));
      return out;
    }
    if (json_of(verdict)["stage"] != 2) {
      out.fail("JSON report does not show stage 2");
      return out;
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// 9. CLI contract: byte-exact parse/emit round-trips over the fixture
//    corpus, and the scripted exit-status matrix.

Outcome cli_contract() {
  Outcome out;
  const std::string fixtures = env_or("QMUT_FIXTURES", QMUT_FIXTURES_DIR);
  const std::string cli = env_or("QMUT_CLI", QMUT_CLI_BIN);
  const std::string script = env_or("QMUT_CLI_SCRIPT", QMUT_CLI_SCRIPT_PATH);

  int count = 0;
  for (const auto& entry : std::filesystem::directory_iterator(fixtures)) {
    if (entry.path().extension() != ".q") continue;
    ++count;
    std::ifstream file(entry.path(), std::ios::binary);
    std::ostringstream buffer;
    buffer << file.rdbuf();
    const std::string text = buffer.str();
    try {
      if (emit_quiver(parse_quiver(text)) != text) {
        out.fail("parse/emit round-trip differs for " +
                 entry.path().filename().string());
      }
    } catch (const std::exception& e) {
      out.fail(entry.path().filename().string() + ": " + e.what());
    }
  }
  if (count < 20)
    out.fail("fixture corpus has only " + std::to_string(count) + " quivers");

  const std::string command =
      "bash '" + script + "' '" + cli + "' '" + fixtures + "' >/dev/null 2>&1";
  if (std::system(command.c_str()) != 0)
    out.fail("CLI exit-status script failed (run tests/cli_test.sh directly "
             "for details)");
  return out;
}

}  // namespace

int main() {
  struct Entry {
    int number;
    const char* name;
    Outcome (*run)();
    double limit_seconds;  // 0 = no stated bound
  };
  const std::vector<Entry> criteria = {
      {1, "involutivity", involutivity, 5.0},
      {2, "mutation closure", closure, 0.0},
      {3, "closed form vs three-step procedure", closed_form_equivalence,
       10.0},
      {4, "doubled-triangle fixture", markov_fixture, 0.0},
      {5, "A3 path class", a3_class, 1.0},
      {6, "triangle criterion validation", triangle_criterion, 60.0},
      {7, "subquivers of mutation-acyclic quivers", subquiver_property, 0.0},
      {8, "pruning soundness", pruning_soundness, 0.0},
      {9, "CLI round-trip and exit statuses", cli_contract, 0.0},
  };

  int failed = 0;
  for (const Entry& entry : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome outcome;
    try {
      outcome = entry.run();
    } catch (const std::exception& e) {
      outcome.fail(std::string("exception: ") + e.what());
    }
    const double seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
            .count();
    if (entry.limit_seconds > 0 && seconds > entry.limit_seconds)
      outcome.fail("took " + std::to_string(seconds) + "s, limit " +
                   std::to_string(entry.limit_seconds) + "s");

    std::printf("criterion %d (%s): %s (%.2fs)%s%s\n", entry.number,
                entry.name, outcome.pass ? "PASS" : "FAIL", seconds,
                outcome.detail.empty() ? "" : " -- ",
                outcome.detail.c_str());
    if (!outcome.pass) ++failed;
  }
  if (failed != 0)
    std::printf("%d of %zu criteria failed\n", failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
