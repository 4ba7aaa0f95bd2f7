#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "qmut/canonical.hpp"
#include "qmut/decide.hpp"
#include "qmut/explore.hpp"
#include "qmut/textio.hpp"

namespace {

// Exit statuses: 0 success, 1 usage or parse error, 2 unknown verdict,
// 3 internal limit (overflow or canonicalization cap).
constexpr int kOk = 0;
constexpr int kUsage = 1;
constexpr int kUnknown = 2;
constexpr int kLimit = 3;

std::string read_input(const std::string& path) {
  if (path == "-") {
    std::ostringstream buffer;
    buffer << std::cin.rdbuf();
    return buffer.str();
  }
  std::ifstream file(path, std::ios::binary);
  if (!file) throw std::runtime_error("cannot open '" + path + "'");
  std::ostringstream buffer;
  buffer << file.rdbuf();
  return buffer.str();
}

qmut::Quiver load_quiver(const std::string& path) {
  try {
    return qmut::parse_quiver(read_input(path));
  } catch (const qmut::ParseError& e) {
    throw std::runtime_error(path + ": " + e.what());
  }
}

std::string join(const std::vector<int>& xs) {
  std::string out;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i) out.push_back(' ');
    out += std::to_string(xs[i]);
  }
  return out;
}

void print_certificate(const qmut::Certificate& cert, int indent) {
  const std::string pad(static_cast<std::size_t>(indent) * 2, ' ');
  switch (cert.kind) {
    case qmut::Certificate::Kind::ThreeVertexInvariant:
      std::cout << pad << "certificate: three-vertex-invariant vertices=["
                << join(cert.vertices) << "] weights=[" << cert.weights[0]
                << " " << cert.weights[1] << " " << cert.weights[2]
                << "] constant=" << cert.constant << "\n";
      break;
    case qmut::Certificate::Kind::CyclicSubquiver:
      std::cout << pad << "certificate: cyclic-subquiver vertices=["
                << join(cert.vertices) << "]\n";
      if (cert.inner) print_certificate(*cert.inner, indent + 1);
      break;
    case qmut::Certificate::Kind::ExhaustedClass:
      std::cout << pad << "certificate: exhausted-class representatives="
                << (cert.report ? cert.report->representatives.size() : 0)
                << "\n";
      break;
  }
}

void print_report(const qmut::ClassReport& report) {
  std::cout << "complete: " << (report.complete ? "yes" : "no") << "\n";
  if (!report.truncated_reasons.empty()) {
    std::cout << "truncated:";
    for (qmut::Truncation t : report.truncated_reasons) {
      switch (t) {
        case qmut::Truncation::MaxQuivers: std::cout << " max-quivers"; break;
        case qmut::Truncation::MaxDepth: std::cout << " max-depth"; break;
        case qmut::Truncation::MaxEntry: std::cout << " max-entry"; break;
      }
    }
    std::cout << "\n";
  }
  std::cout << "representatives: " << report.representatives.size() << "\n";
  for (std::size_t i = 0; i < report.representatives.size(); ++i) {
    const qmut::ClassEntry& entry = report.representatives[i];
    std::cout << "[" << i << "] hash=" << qmut::hash_hex(entry.form.hash)
              << " witness=[" << join(entry.witness) << "]\n";
  }
}

struct BudgetFlags {
  qmut::Budget budget;

  void attach(CLI::App* cmd) {
    cmd->add_option("--max-quivers", budget.max_quivers,
                    "cap on distinct canonical forms visited")
        ->capture_default_str();
    cmd->add_option("--max-depth", budget.max_depth,
                    "cap on mutation-word length")
        ->capture_default_str();
    cmd->add_option("--max-entry", budget.max_entry,
                    "cap on |entry| before a branch is dropped")
        ->capture_default_str();
  }
};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"quiver mutation toolkit: mutation classes, isomorphism and "
               "mutation-acyclicity certificates"};
  app.require_subcommand(1);

  std::string file, file2, vertex_list;
  std::vector<int> word;
  bool as_json = false;
  BudgetFlags class_budget, decide_budget;
  int recurse_subquivers = 0;

  CLI::App* mutate_cmd =
      app.add_subcommand("mutate", "apply a mutation word, print the quiver");
  mutate_cmd->add_option("file", file, "quiver file ('-' for stdin)")
      ->required();
  mutate_cmd->add_option("vertex", word, "vertices to mutate at, in order")
      ->required()
      ->expected(-1);

  CLI::App* class_cmd =
      app.add_subcommand("class", "enumerate the mutation class");
  class_cmd->add_option("file", file, "quiver file ('-' for stdin)")
      ->required();
  class_budget.attach(class_cmd);
  class_cmd->add_flag("--json", as_json, "machine-readable output");

  CLI::App* decide_cmd = app.add_subcommand(
      "decide", "semi-decide mutation-acyclicity with a certificate");
  decide_cmd->add_option("file", file, "quiver file ('-' for stdin)")
      ->required();
  decide_budget.attach(decide_cmd);
  decide_cmd
      ->add_option("--recurse-subquivers", recurse_subquivers,
                   "levels of proper-subquiver recursion")
      ->capture_default_str();
  decide_cmd->add_flag("--json", as_json, "machine-readable output");

  CLI::App* iso_cmd =
      app.add_subcommand("iso", "test two quivers for isomorphism");
  iso_cmd->add_option("file1", file, "first quiver file")->required();
  iso_cmd->add_option("file2", file2, "second quiver file")->required();
  iso_cmd->add_flag("--json", as_json, "machine-readable output");

  CLI::App* canon_cmd = app.add_subcommand(
      "canon", "print the canonical matrix and its stable hash");
  canon_cmd->add_option("file", file, "quiver file ('-' for stdin)")
      ->required();
  canon_cmd->add_flag("--json", as_json, "machine-readable output");

  CLI::App* sub_cmd = app.add_subcommand(
      "subquiver", "print the full subquiver on a vertex subset");
  sub_cmd->add_option("file", file, "quiver file ('-' for stdin)")->required();
  sub_cmd->add_option("vertices", vertex_list, "comma-separated vertex list")
      ->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    if (*mutate_cmd) {
      const qmut::Quiver q = load_quiver(file);
      std::cout << qmut::emit_quiver(qmut::mutate_seq(q, word));
      return kOk;
    }

    if (*class_cmd) {
      const qmut::ClassReport report =
          qmut::explore(load_quiver(file), class_budget.budget);
      if (as_json) {
        std::cout << qmut::emit_json(report) << "\n";
      } else {
        print_report(report);
      }
      return kOk;
    }

    if (*decide_cmd) {
      const qmut::Verdict verdict = qmut::decide(
          load_quiver(file), decide_budget.budget, recurse_subquivers);
      if (as_json) {
        std::cout << qmut::emit_json(verdict) << "\n";
      } else {
        switch (verdict.kind) {
          case qmut::Verdict::Kind::MutationAcyclic:
            std::cout << "verdict: mutation-acyclic\n"
                      << "witness: [" << join(verdict.witness) << "]\n";
            break;
          case qmut::Verdict::Kind::MutationCyclic:
            std::cout << "verdict: mutation-cyclic\n";
            print_certificate(*verdict.certificate, 0);
            break;
          case qmut::Verdict::Kind::Unknown:
            std::cout << "verdict: unknown\n";
            if (verdict.report) print_report(*verdict.report);
            break;
        }
        std::cout << "stage: " << verdict.stage << "\n";
      }
      return verdict.kind == qmut::Verdict::Kind::Unknown ? kUnknown : kOk;
    }

    if (*iso_cmd) {
      const bool yes =
          qmut::is_isomorphic(load_quiver(file), load_quiver(file2));
      if (as_json) {
        std::cout << nlohmann::json{{"isomorphic", yes}}.dump() << "\n";
      } else {
        std::cout << (yes ? "isomorphic" : "not isomorphic") << "\n";
      }
      return kOk;
    }

    if (*canon_cmd) {
      const qmut::CanonicalForm form = qmut::canonicalize(load_quiver(file));
      if (as_json) {
        std::cout << qmut::json_of(form).dump() << "\n";
      } else {
        std::cout << qmut::emit_quiver(qmut::canonical_quiver(form))
                  << "# hash " << qmut::hash_hex(form.hash) << "\n";
      }
      return kOk;
    }

    if (*sub_cmd) {
      std::vector<int> vertices;
      std::stringstream ss(vertex_list);
      std::string item;
      while (std::getline(ss, item, ',')) {
        try {
          std::size_t used = 0;
          const int v = std::stoi(item, &used);
          if (used != item.size()) throw std::invalid_argument(item);
          vertices.push_back(v);
        } catch (const std::exception&) {
          throw std::invalid_argument("bad vertex '" + item +
                                      "' in subset list");
        }
      }
      std::cout << qmut::emit_quiver(
          qmut::full_subquiver(load_quiver(file), vertices));
      return kOk;
    }
  } catch (const qmut::OverflowError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kLimit;
  } catch (const qmut::CanonLimitError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kLimit;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}
