#include "cli.hpp"

#include <filesystem>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "osborn/autotopy.hpp"
#include "osborn/errors.hpp"
#include "osborn/filter.hpp"
#include "osborn/holomorph.hpp"
#include "osborn/loop_io.hpp"
#include "osborn/nuclei.hpp"
#include "osborn/report.hpp"
#include "osborn/sweep.hpp"
#include "osborn/verifier.hpp"

namespace osborn::cli {

namespace {

std::string elems(const ElementSet& s) {
  std::string out = "{";
  for (std::size_t i = 0; i < s.members().size(); ++i)
    out += (i ? "," : "") + std::to_string(s.members()[i] + 1);
  return out + "}";
}

// Group selection shared by holomorph and verify.
struct GroupChoice {
  std::string aum = "full";
  std::vector<std::string> gens;

  void attach(CLI::App* app) {
    auto* a = app->add_option("--aum", aum, "automorphism group: full or trivial")
                  ->check(CLI::IsMember({"full", "trivial"}));
    auto* g = app->add_option("--gens", gens,
                              "generator image lists, 1-based, e.g. \"1,3,2\" (repeat or "
                              "separate with ';')");
    a->excludes(g);
  }

  PermGroup resolve(const LoopTable& L, unsigned jobs) const {
    if (!gens.empty()) {
      std::vector<Perm> ps;
      for (const auto& g : gens) {
        std::stringstream ss(g);
        for (std::string item; std::getline(ss, item, ';');)
          if (!item.empty()) ps.push_back(parse_perm_literal(item));
      }
      return subgroup_closure(L, ps);
    }
    if (aum == "trivial") return PermGroup(L.order());
    SearchLimits lim;
    lim.jobs = jobs;
    return automorphism_group(L, lim);
  }

  std::string label() const {
    if (!gens.empty()) return "generated";
    return aum == "trivial" ? "trivial" : "aum";
  }
};

void write_text(const std::string& path, const std::string& text) {
  std::ofstream f(path);
  if (!f) throw InputError("cannot write " + path);
  f << text;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Finite loops, holomorphs and Osborn checks", "osborn"};
  app.require_subcommand(1);
  app.fallthrough();  // global flags may follow the subcommand
  bool json = false;
  unsigned jobs = 1;
  app.add_flag("--json", json, "JSON output");
  app.add_option("-j,--jobs", jobs, "worker threads")->check(CLI::Range(1u, 256u));

  std::string file;
  auto* validate = app.add_subcommand("validate", "check that a file holds a loop");
  validate->add_option("file", file)->required();
  auto* props = app.add_subcommand("props", "order, identity, associativity, inverses");
  props->add_option("file", file)->required();
  auto* nuclei = app.add_subcommand("nuclei", "nuclei, centrum and center");
  nuclei->add_option("file", file)->required();

  auto* aut = app.add_subcommand("aut", "autotopisms, automorphisms or regular bijections");
  aut->add_option("file", file)->required();
  bool triples = false, automorphisms = false, regular = false, oracle = false;
  auto* f_tr = aut->add_flag("--triples", triples, "AUT(L) as triples");
  auto* f_au = aut->add_flag("--automorphisms", automorphisms, "AUM(L)");
  auto* f_re = aut->add_flag("--regular", regular, "P, Lambda, Phi, Psi and adjoints");
  aut->add_flag("--oracle", oracle, "also run the brute-force route and compare");
  f_tr->excludes(f_au)->excludes(f_re);
  f_au->excludes(f_re);

  auto* holo = app.add_subcommand("holomorph", "emit the A-holomorph as a loop file");
  holo->add_option("file", file)->required();
  GroupChoice holo_group;
  holo_group.attach(holo);
  std::string holo_out;
  holo->add_option("-o,--out", holo_out, "output file (default stdout)");

  auto* verify = app.add_subcommand("verify", "run the Osborn holomorph checks");
  verify->add_option("file", file)->required();
  GroupChoice verify_group;
  verify_group.attach(verify);
  std::vector<std::string> checks;
  verify->add_option("--checks", checks, "all, or a list of check families")->delimiter(',');
  std::size_t budget = 512;
  verify->add_option("--budget", budget, "largest holomorph order for the direct scan");

  auto* enumerate = app.add_subcommand("enumerate", "generate normalized loops");
  std::size_t order = 0;
  enumerate->add_option("--order", order)->required();
  std::vector<std::string> filters;
  enumerate->add_option("--filter", filters, "predicates, comma separated")->delimiter(',');
  std::optional<std::size_t> limit;
  enumerate->add_option("--limit", limit, "cap on emitted loops");
  std::string out_dir, stream_path;
  auto* o_dir = enumerate->add_option("--out", out_dir, "directory: one file per loop");
  auto* o_stream =
      enumerate->add_option("--stream", stream_path, "single file ('-' for stdout), '---' between loops");
  o_dir->excludes(o_stream);
  bool every_identity = false;
  enumerate->add_flag("--all-identities", every_identity,
                      "also emit each table relabelled to every identity position");
  enumerate->add_option("--budget", budget);

  auto* sweep = app.add_subcommand("sweep", "full reports over the normalized corpus");
  CorpusSpec corpus;
  sweep->add_option("--min-order", corpus.min_order);
  sweep->add_option("--max-order", corpus.max_order)->check(CLI::Range(1, 6));
  sweep->add_option("--all-subgroups-up-to", corpus.all_subgroups_up_to);
  sweep->add_option("--checks", checks)->delimiter(',');
  std::string sweep_out;
  sweep->add_option("-o,--out", sweep_out, "write the JSON report here instead of stdout");
  sweep->add_option("--budget", budget);

  std::vector<std::string> argv_rev(args.rbegin(), args.rend());
  try {
    app.parse(argv_rev);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp& e) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kInputError;
  }
  if (std::find(checks.begin(), checks.end(), "all") != checks.end()) checks.clear();

  try {
    if (validate->parsed()) {
      const LoopTable L = read_loop_file(file);
      if (json) {
        Json j;
        j["valid"] = true;
        j["order"] = L.order();
        j["identity"] = L.identity() + 1;
        out << dump(j);
      } else {
        out << "valid loop of order " << L.order() << ", identity " << L.identity() + 1 << '\n';
      }
      return kOk;
    }

    if (props->parsed()) {
      const LoopTable L = read_loop_file(file);
      const auto triple = first_nonassociative_triple(L);
      Json j;
      j["order"] = L.order();
      j["identity"] = L.identity() + 1;
      j["associative"] = !triple;
      if (triple) j["nonassociativeTriple"] = {(*triple)[0] + 1, (*triple)[1] + 1, (*triple)[2] + 1};
      j["commutative"] = is_commutative(L);
      Json lam = Json::array(), rho = Json::array();
      for (Elem x = 0; x < L.order(); ++x) {
        lam.push_back(L.left_inverse(x) + 1);
        rho.push_back(L.right_inverse(x) + 1);
      }
      j["leftInverse"] = std::move(lam);
      j["rightInverse"] = std::move(rho);
      if (json) {
        out << dump(j);
      } else {
        out << "order " << L.order() << ", identity " << L.identity() + 1 << '\n';
        out << "associative: " << (triple ? "no" : "yes");
        if (triple)
          out << " (first failure at x=" << (*triple)[0] + 1 << " y=" << (*triple)[1] + 1
              << " z=" << (*triple)[2] + 1 << ')';
        out << "\ncommutative: " << (is_commutative(L) ? "yes" : "no") << '\n';
        out << "x   x^lambda x^rho\n";
        for (Elem x = 0; x < L.order(); ++x)
          out << std::setw(3) << x + 1 << ' ' << std::setw(8) << L.left_inverse(x) + 1 << ' '
              << std::setw(5) << L.right_inverse(x) + 1 << '\n';
      }
      return kOk;
    }

    if (nuclei->parsed()) {
      const LoopTable L = read_loop_file(file);
      const NucleiReport r = nuclei_report(L);
      if (json) {
        out << dump(to_json(r));
      } else {
        out << "N_lambda " << elems(r.n_lambda) << "\nN_rho    " << elems(r.n_rho)
            << "\nN_mu     " << elems(r.n_mu) << "\nN        " << elems(r.nucleus)
            << "\nC        " << elems(r.centrum) << "\nZ        " << elems(r.center) << '\n';
      }
      return kOk;
    }

    if (aut->parsed()) {
      const LoopTable L = read_loop_file(file);
      SearchLimits lim;
      lim.jobs = jobs;
      if (!triples && !automorphisms && !regular)
        throw InputError("aut needs one of --triples, --automorphisms, --regular");
      Json j;
      bool agree = true;
      if (triples) {
        const auto t = autotopism_group(L, lim);
        Json arr = Json::array();
        for (const auto& x : t) arr.push_back(to_json(x));
        j["order"] = t.size();
        j["triples"] = std::move(arr);
        if (oracle) agree = autotopism_group_oracle(L, lim) == t;
      } else if (automorphisms) {
        const PermGroup g = automorphism_group(L, lim);
        j = to_json(g);
        if (oracle) {
          std::vector<Perm> diag;
          for (const auto& t : autotopism_group(L, lim))
            if (t.a == t.b && t.b == t.c) diag.push_back(t.a);
          agree = diag == g.elements();
        }
      } else {
        const RegularSets r = regular_sets(L);
        j = to_json(r);
        if (oracle) {
          const RegularSets o = regular_sets_oracle(L, lim);
          agree = o.p_set == r.p_set && o.lambda_set == r.lambda_set &&
                  o.phi_set == r.phi_set && o.psi_set == r.psi_set &&
                  o.adjoint_pairs == r.adjoint_pairs;
        }
      }
      if (oracle) j["oracleAgrees"] = agree;
      if (json) {
        out << dump(j);
      } else {
        auto list = [&](const char* title, const Json& g) {
          out << title << " (order " << g["order"].get<std::size_t>() << ")\n";
          for (const auto& p : g["elements"]) out << "  " << p.get<std::string>() << '\n';
        };
        if (triples) {
          out << "AUT (order " << j["order"].get<std::size_t>() << ")\n";
          for (const auto& t : j["triples"])
            out << "  (" << t[0].get<std::string>() << " | " << t[1].get<std::string>() << " | "
                << t[2].get<std::string>() << ")\n";
        } else if (automorphisms) {
          list("AUM", j);
        } else {
          list("P", j["P"]);
          list("Lambda", j["Lambda"]);
          list("Phi", j["Phi"]);
          list("Psi", j["Psi"]);
          out << "adjoints\n";
          for (const auto& p : j["adjoints"])
            out << "  " << p[0].get<std::string>() << " -> " << p[1].get<std::string>() << '\n';
        }
        if (oracle) out << "oracle: " << (agree ? "agrees" : "DISAGREES") << '\n';
      }
      return agree ? kOk : kCheckFailed;
    }

    if (holo->parsed()) {
      const LoopTable L = read_loop_file(file);
      const PermGroup A = holo_group.resolve(L, jobs);
      const HolomorphLoop H = build_holomorph(L, A);
      std::vector<std::string> header = {
          "A-holomorph: |A| = " + std::to_string(A.order()) + ", n = " +
              std::to_string(L.order()) + ", order " + std::to_string(H.table().order()),
          "pair (g, x) is element g*n + x + 1, g indexing A in canonical order"};
      if (!A.generators().empty()) {
        std::string g = "generators:";
        for (const auto& p : A.generators()) g += " [" + perm_literal(p) + "]";
        header.push_back(g);
      }
      for (std::size_t i = 0; i < A.order(); ++i)
        header.push_back("g" + std::to_string(i + 1) + " = " + perm_literal(A[i]));
      const std::string text = loop_to_string(H.table(), header);
      if (holo_out.empty())
        out << text;
      else
        write_text(holo_out, text);
      return kOk;
    }

    if (verify->parsed()) {
      const LoopTable L = read_loop_file(file);
      const PermGroup A = verify_group.resolve(L, jobs);
      VerifierOptions opt;
      opt.holomorph_budget = budget;
      opt.jobs = jobs;
      TheoremReport r = full_report(L, A, checks, opt);
      r.loop_id = std::filesystem::path(file).filename().string();
      r.group_id = verify_group.label();
      out << (json ? dump(to_json(r)) : text_summary(r));
      return r.passed() ? kOk : kCheckFailed;
    }

    if (enumerate->parsed()) {
      EnumSpec spec;
      spec.order = order;
      spec.normalized = !every_identity;
      spec.limit = limit;
      for (const auto& f : filters) spec.filters.push_back(parse_filter(f));
      const FilterSummary s = filter_count(spec, jobs, budget);
      std::ostream* summary = &out;
      if (!out_dir.empty()) {
        std::filesystem::create_directories(out_dir);
        for (std::size_t i = 0; i < s.matches.size(); ++i) {
          std::ostringstream name;
          name << "loop-" << std::setw(5) << std::setfill('0') << i + 1 << ".txt";
          write_text((std::filesystem::path(out_dir) / name.str()).string(),
                     loop_to_string(s.matches[i]));
        }
      } else if (!stream_path.empty()) {
        std::ostringstream text;
        for (std::size_t i = 0; i < s.matches.size(); ++i) {
          if (i) text << "---\n";
          write_loop(text, s.matches[i]);
        }
        if (stream_path == "-") {
          out << text.str();
          summary = &err;
        } else {
          write_text(stream_path, text.str());
        }
      }
      *summary << dump(to_json(s));
      return kOk;
    }

    if (sweep->parsed()) {
      if (corpus.min_order < 1 || corpus.min_order > corpus.max_order)
        throw InputError("need 1 <= --min-order <= --max-order");
      const auto entries = build_corpus(corpus, jobs);
      const auto reports = run_sweep(entries, checks, jobs, budget);
      const std::string text = dump(sweep_json(corpus, reports));
      if (sweep_out.empty())
        out << text;
      else
        write_text(sweep_out, text);
      bool ok = std::all_of(reports.begin(), reports.end(),
                            [](const TheoremReport& r) { return r.passed(); });
      return ok ? kOk : kCheckFailed;
    }
  } catch (const InputError& e) {
    err << "input error: " << e.what() << '\n';
    return kInputError;
  } catch (const BoundError& e) {
    err << "bound exceeded: " << e.what() << '\n';
    return kBoundError;
  } catch (const PointCountMismatch& e) {
    err << "input error: " << e.what() << '\n';
    return kInputError;
  }
  return kInputError;
}

}  // namespace osborn::cli
