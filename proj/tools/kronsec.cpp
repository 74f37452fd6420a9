#include "kronsec/apolarity.hpp"
#include "kronsec/brion.hpp"
#include "kronsec/characters.hpp"
#include "kronsec/config.hpp"
#include "kronsec/curvebounds.hpp"
#include "kronsec/loop_spec.hpp"
#include "kronsec/monodromy.hpp"
#include "kronsec/seminormal.hpp"

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <fstream>
#include <iomanip>
#include <iostream>
#include <iterator>
#include <memory>
#include <random>
#include <sstream>

using namespace kronsec;
using Json = nlohmann::ordered_json;

namespace {

struct Output {
  std::ostream* out = &std::cout;
  std::unique_ptr<std::ofstream> file;
  bool human = false;

  void open(const std::string& path) {
    if (path.empty() || path == "-") return;
    file = std::make_unique<std::ofstream>(path);
    if (!*file) throw DomainError("cannot open output '" + path + "'");
    out = file.get();
  }
};

std::string render_scalar(const Json& v) { return v.is_string() ? v.get<std::string>() : v.dump(); }

// Aligned "key  value" lines; arrays of objects as indented blocks.
void render_human(std::ostream& os, const Json& j, int indent = 0) {
  std::size_t width = 0;
  for (const auto& [k, v] : j.items()) width = std::max(width, k.size());
  const std::string pad(static_cast<std::size_t>(indent), ' ');
  for (const auto& [k, v] : j.items()) {
    if (v.is_array() && !v.empty() && v.front().is_object()) {
      os << pad << k << ":\n";
      for (const auto& e : v) {
        std::string line;
        for (const auto& [ek, ev] : e.items()) line += (line.empty() ? "" : "  ") + ek + "=" + render_scalar(ev);
        os << pad << "  " << line << '\n';
      }
    } else if (v.is_array()) {
      std::string line;
      for (const auto& e : v) line += (line.empty() ? "" : " ") + render_scalar(e);
      os << pad << std::left << std::setw(static_cast<int>(width)) << k << "  " << line << '\n';
    } else {
      os << pad << std::left << std::setw(static_cast<int>(width)) << k << "  " << render_scalar(v) << '\n';
    }
  }
}

void emit(Output& o, const Json& j) {
  if (o.human) render_human(*o.out, j);
  else *o.out << j.dump() << '\n';
}

Json multiset_json(const Multiset& m) {
  Json a = Json::array();
  for (const auto& [p, k] : m) a.push_back({{"partition", to_string(p)}, {"multiplicity", k}});
  return a;
}

void render_table(std::ostream& os, const CharacterTable& t) {
  std::vector<std::string> head{""};
  for (const auto& c : t.classes()) head.push_back(to_string(c.cycle_type));
  std::vector<std::vector<std::string>> rows{head};
  for (std::size_t r = 0; r < t.count(); ++r) {
    std::vector<std::string> row{to_string(t.irreducibles()[r])};
    for (auto v : t.values()[r]) row.push_back(std::to_string(v));
    rows.push_back(std::move(row));
  }
  std::vector<std::size_t> width(head.size());
  for (const auto& row : rows)
    for (std::size_t c = 0; c < row.size(); ++c) width[c] = std::max(width[c], row[c].size());
  for (const auto& row : rows) {
    for (std::size_t c = 0; c < row.size(); ++c)
      os << (c ? "  " : "") << (c ? std::right : std::left) << std::setw(static_cast<int>(width[c])) << row[c];
    os << '\n';
  }
}

void render_record_human(std::ostream& os, const BrionRecord& r) {
  os << std::left << std::setw(3) << r.n << std::setw(10) << to_string(r.lambda) << std::setw(10) << to_string(r.omega)
     << std::setw(16) << (r.sigma ? to_string(*r.sigma) : "below-threshold") << std::setw(16)
     << (r.big_sigma ? to_string(*r.big_sigma) : "-") << std::setw(6) << (r.kron ? std::to_string(*r.kron) : "-")
     << std::setw(6) << (r.lr ? std::to_string(*r.lr) : "-") << r.verdict << '\n';
}

std::vector<int> parse_word(const std::string& text) {
  std::vector<int> w;
  std::stringstream ss(text);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    try {
      std::size_t used = 0;
      w.push_back(std::stoi(tok, &used));
      if (used != tok.size()) throw std::invalid_argument(tok);
    } catch (const std::exception&) {
      throw DomainError("malformed braid word '" + text + "': expected comma-separated nonzero integers");
    }
  }
  return w;
}

Json loop_json(const MonodromyLoop& loop) {
  return {{"n", loop.roots.size()},
          {"permutation", cycle_notation(loop.permutation)},
          {"segments", loop.segments},
          {"steps", loop.stats.steps},
          {"halvings", loop.stats.halvings},
          {"min_step", loop.stats.min_step},
          {"min_gap", loop.stats.min_gap},
          {"max_step", loop.max_step}};
}

std::string read_all(const std::string& path) {
  if (path == "-") return {std::istreambuf_iterator<char>(std::cin), {}};
  std::ifstream in(path);
  if (!in) throw DomainError("cannot open loop spec '" + path + "'");
  return {std::istreambuf_iterator<char>(in), {}};
}

void error_line(const char* kind, const std::string& message) {
  std::cerr << Json{{"error", kind}, {"message", message}}.dump() << '\n';
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"kronsec: exact Kronecker, Littlewood-Richardson, apolarity and monodromy computations"};
  app.require_subcommand(1);
  app.fallthrough();
  Output out;
  std::string output_path, config_path;
  app.add_flag("--human", out.human, "aligned text instead of JSON");
  app.add_option("--output", output_path, "output path ('-' for stdout); overrides the config file");
  app.add_option("--config", config_path, std::string("key=value config file; default from $") + kConfigEnv);
  std::optional<std::uint64_t> seed_override;
  app.add_option("--seed", seed_override, "random seed; overrides the config file");

  Config cfg;
  std::function<int()> action;
  auto seed = [&] { return seed_override ? *seed_override : cfg.seed; };

  // chartable
  int ct_n = 0;
  auto* chartable = app.add_subcommand("chartable", "character table of S_n");
  chartable->add_option("n", ct_n)->required();
  chartable->callback([&] {
    action = [&] {
      const auto t = character_table(ct_n, cfg.n_cap);
      if (out.human) {
        render_table(*out.out, *t);
        return 0;
      }
      Json classes = Json::array();
      for (const auto& c : t->classes())
        classes.push_back({{"cycle_type", to_string(c.cycle_type)}, {"size", c.class_size.convert_to<long long>()}});
      Json irr = Json::array();
      for (const auto& p : t->irreducibles()) irr.push_back(to_string(p));
      emit(out, {{"n", ct_n}, {"irreducibles", irr}, {"classes", classes}, {"values", t->values()}});
      return 0;
    };
  });

  // kron
  std::string k1, k2, k3;
  auto* kron = app.add_subcommand("kron", "Kronecker coefficient of Sigma in Lambda (x) Omega");
  kron->add_option("Lambda", k1)->required();
  kron->add_option("Omega", k2)->required();
  kron->add_option("Sigma", k3)->required();
  kron->callback([&] {
    action = [&] {
      emit(out, {{"kron", kronecker(parse_partition(k1), parse_partition(k2), parse_partition(k3), cfg.n_cap)}});
      return 0;
    };
  });

  // lr
  std::string l1, l2, l3;
  bool inject_fault = false;
  auto* lr = app.add_subcommand("lr", "Littlewood-Richardson coefficient, both routes");
  lr->add_option("lambda", l1)->required();
  lr->add_option("omega", l2)->required();
  lr->add_option("sigma", l3)->required();
  lr->add_flag("--inject-fault", inject_fault)->group("");
  lr->callback([&] {
    action = [&] {
      const Partition a = parse_partition(l1), b = parse_partition(l2), s = parse_partition(l3);
      const auto tableaux = lr_coefficient(a, b, s);
      auto chars = lr_by_characters(a, b, s);
      if (inject_fault) ++chars;
      if (tableaux != chars)
        throw ConsistencyError("lr routes disagree: tableaux " + std::to_string(tableaux) + ", characters " +
                               std::to_string(chars));
      emit(out, {{"lr", tableaux}});
      return 0;
    };
  });

  // pieri
  std::string pieri_lambda;
  int pieri_n = 0;
  auto* pieri = app.add_subcommand("pieri", "Ind from S_k x S_{n-k} of lambda x trivial");
  pieri->add_option("lambda", pieri_lambda)->required();
  pieri->add_option("n", pieri_n)->required();
  pieri->callback([&] {
    action = [&] {
      const Partition lambda = parse_partition(pieri_lambda);
      Json j{{"lambda", to_string(lambda)}, {"n", pieri_n}, {"summands", multiset_json(pieri_decompose(lambda, pieri_n))}};
      const int k = lambda.size();
      if (2 * k <= pieri_n + 1 && can_attach_first_row(lambda, pieri_n))
        j["distinguished"] = to_string(pieri_distinguished(lambda, pieri_n));
      else
        j["distinguished"] = nullptr;
      emit(out, j);
      return 0;
    };
  });

  // tensor
  std::string t1, t2;
  auto* tensor = app.add_subcommand("tensor", "decompose Lambda (x) Omega");
  tensor->add_option("Lambda", t1)->required();
  tensor->add_option("Omega", t2)->required();
  tensor->callback([&] {
    action = [&] {
      const Partition a = parse_partition(t1), b = parse_partition(t2);
      const Multiset m = tensor_decompose(a, b, cfg.n_cap);
      Integer total = 0;
      for (const auto& [p, k] : m) total += dimension(p) * k;
      if (total != dimension(a) * dimension(b)) throw ConsistencyError("tensor: dimensions do not add up");
      emit(out, {{"Lambda", to_string(a)}, {"Omega", to_string(b)}, {"decomposition", multiset_json(m)}});
      return 0;
    };
  });

  // rep-check
  std::string rep_shape;
  int rep_words = 100, rep_length = 20;
  auto* rep = app.add_subcommand("rep-check", "seminormal relations and random word traces");
  rep->add_option("lambda", rep_shape)->required();
  rep->add_option("--words", rep_words)->check(CLI::NonNegativeNumber);
  rep->add_option("--max-length", rep_length)->check(CLI::NonNegativeNumber);
  rep->callback([&] {
    action = [&] {
      const Partition shape = parse_partition(rep_shape);
      const SeminormalRep r = build_rep(shape);
      const RelationReport rel = check_relations(r);
      std::mt19937_64 rng(seed());
      std::uniform_int_distribution<int> letter(1, r.n() - 1), len(0, rep_length);
      int matched = 0;
      for (int w = 0; w < rep_words; ++w) {
        std::vector<int> word(static_cast<std::size_t>(len(rng)));
        for (auto& x : word) x = letter(rng);
        if (evaluate_word(r, word).trace() == mn_value(shape, cycle_type(word_permutation(r.n(), word)))) ++matched;
      }
      emit(out, {{"shape", to_string(shape)},
                 {"dimension", r.dimension()},
                 {"involutions", rel.involutions},
                 {"braids", rel.braids},
                 {"commutations", rel.commutations},
                 {"spherical", rel.spherical},
                 {"words", rep_words},
                 {"traces_matched", matched},
                 {"seed", seed()}});
      if (!rel.ok() || matched != rep_words) throw ConsistencyError("rep-check: seminormal representation failed a check");
      return 0;
    };
  });

  // secant
  std::string secant_form;
  int secant_k = 0;
  auto* secant = app.add_subcommand("secant", "membership of a binary form in Sec^k of the rational normal curve");
  secant->add_option("form", secant_form)->required();
  secant->add_option("k", secant_k)->required();
  secant->callback([&] {
    action = [&] {
      const BinaryForm p = parse_binary_form(secant_form);
      emit(out, {{"form", to_string(p)},
                 {"k", secant_k},
                 {"kernel_dimension", kernel_dimension(p, secant_k)},
                 {"member", secant_membership(p, secant_k)},
                 {"minimal_degree", minimal_annihilator_degree(p)}});
      return 0;
    };
  });

  // sylvester
  std::string syl_form;
  std::optional<int> syl_bits;
  auto* syl = app.add_subcommand("sylvester", "Waring decomposition by Sylvester's algorithm");
  syl->add_option("form", syl_form)->required();
  syl->add_option("--precision-bits", syl_bits);
  syl->callback([&] {
    action = [&] {
      const auto cert = sylvester_decompose(parse_binary_form(syl_form), syl_bits.value_or(cfg.precision_bits));
      Json j{{"form", to_string(cert.form)}, {"k", cert.k}, {"kernel_dimension", cert.kernel_dimension},
             {"member", cert.member}, {"rank", cert.rank}};
      j["annihilator"] = cert.annihilator ? Json(to_string(*cert.annihilator)) : Json(nullptr);
      j["exact"] = cert.exact;
      if (cert.support) {
        Json s = Json::array();
        for (const auto& pt : *cert.support) {
          if (pt.exact) s.push_back({{"point", to_string(pt.point)}});
          else s.push_back({{"re", pt.re}, {"im", pt.im}, {"radius", pt.radius}});
        }
        j["support"] = s;
        Json c = Json::array();
        for (const auto& co : cert.coefficients) {
          if (co.exact) c.push_back(co.value.str());
          else c.push_back({{"re", co.re}, {"im", co.im}});
        }
        j["coefficients"] = c;
      } else {
        j["support"] = nullptr;
        j["coefficients"] = nullptr;
      }
      j["error_bound"] = cert.error_bound;
      emit(out, j);
      return 0;
    };
  });

  // vdm
  int vdm_n = 0;
  std::vector<std::string> vdm_nodes;
  std::optional<int> vdm_random;
  auto* vdm = app.add_subcommand("vdm", "rank of the moment (Vandermonde) matrix of points on P^1");
  vdm->add_option("--degree", vdm_n)->required();
  vdm->add_option("nodes", vdm_nodes, "points t, a:b or inf");
  vdm->add_option("--random", vdm_random, "draw this many distinct integer nodes instead");
  vdm->callback([&] {
    action = [&] {
      std::vector<ProjectivePoint> nodes;
      Json j{{"n", vdm_n}};
      if (vdm_random) {
        if (*vdm_random < 0) throw DomainError("vdm: --random needs a non-negative count");
        std::mt19937_64 rng(seed());
        std::uniform_int_distribution<int> coord(-4 * (*vdm_random + 1), 4 * (*vdm_random + 1));
        while (static_cast<int>(nodes.size()) < *vdm_random) {
          const int a = coord(rng), b = coord(rng);
          if (a == 0 && b == 0) continue;
          const auto pt = ProjectivePoint::make(a, b);
          if (std::find(nodes.begin(), nodes.end(), pt) == nodes.end()) nodes.push_back(pt);
        }
        j["seed"] = seed();
      } else {
        for (const auto& s : vdm_nodes) nodes.push_back(parse_projective_point(s));
      }
      Json names = Json::array();
      for (const auto& p : nodes) names.push_back(to_string(p));
      const int r = vandermonde_rank(nodes, vdm_n);
      const int expected = std::min(static_cast<int>(nodes.size()), vdm_n + 1);
      j["nodes"] = names;
      j["rank"] = r;
      j["expected"] = expected;
      emit(out, j);
      if (r != expected) throw ConsistencyError("vdm: rank " + std::to_string(r) + " differs from min(m, n+1)");
      return 0;
    };
  });

  // join
  std::string join_p, join_q;
  auto* join = app.add_subcommand("join", "annihilator degrees of p, q and p + q");
  join->add_option("p", join_p)->required();
  join->add_option("q", join_q)->required();
  join->callback([&] {
    action = [&] {
      const auto r = join_rank_check(parse_binary_form(join_p), parse_binary_form(join_q));
      Json j{{"a", r.a}, {"b", r.b}};
      j["c"] = r.sum_is_zero ? Json(nullptr) : Json(r.c);
      j["sum_is_zero"] = r.sum_is_zero;
      j["equality"] = !r.sum_is_zero && r.c == r.a + r.b;
      emit(out, j);
      return 0;
    };
  });

  // curve-bounds
  int cb_genus = 0, cb_degree = 0;
  std::optional<int> cb_k, cb_twist;
  auto* curve = app.add_subcommand("curve-bounds", "Riemann-Roch thresholds for a degree-n bundle on a genus-g curve");
  curve->add_option("--genus", cb_genus)->required();
  curve->add_option("--degree", cb_degree)->required();
  curve->add_option("--k", cb_k, "also test separation of 2k points");
  curve->add_option("--twist", cb_twist, "also report h0(M(-D)) for deg D = twist");
  curve->callback([&] {
    action = [&] {
      const CurveContext ctx{cb_genus, cb_degree};
      Json j{{"max_k", max_admissible_k(ctx)}};
      if (cb_k) j["separates_2k"] = separates_2k(ctx, *cb_k);
      if (cb_twist) j["h0"] = h0(ctx, *cb_twist);
      emit(out, j);
      return 0;
    };
  });

  // monodromy
  std::string mono_spec;
  std::vector<int> mono_generator;
  std::string mono_word;
  int mono_n = 0, mono_samples = 4;
  std::optional<int> mono_spherical, mono_defining;
  double mono_tol = TrackOptions{}.tolerance, mono_step = TrackOptions{}.max_step;
  bool mono_refine = false;
  auto* mono = app.add_subcommand("monodromy", "root monodromy of a loop of squarefree polynomials");
  mono->add_option("spec", mono_spec, "JSON loop specification file ('-' for stdin)");
  mono->add_option("--generator", mono_generator, "n i: the half-twist b_i on roots 1..n")->expected(2);
  mono->add_option("--word", mono_word, "comma-separated braid word on roots 1..n (needs --n)");
  mono->add_option("--n", mono_n);
  mono->add_option("--spherical", mono_spherical, "track b_1..b_{n-1} b_{n-1}..b_1");
  mono->add_option("--defining", mono_defining, "decompose the monodromy permutation representation");
  mono->add_option("--samples", mono_samples, "extra random braid words for --defining")->check(CLI::NonNegativeNumber);
  mono->add_option("--tolerance", mono_tol);
  mono->add_option("--max-step", mono_step);
  mono->add_flag("--check-refinement", mono_refine, "track again with half the step and compare");
  mono->callback([&] {
    action = [&] {
      TrackOptions opt;
      opt.tolerance = mono_tol;
      opt.max_step = mono_step;
      const int modes = !mono_spec.empty() + !mono_generator.empty() + !mono_word.empty() + mono_spherical.has_value() +
                        mono_defining.has_value();
      if (modes != 1)
        throw DomainError("monodromy: give exactly one of a spec file, --generator, --word, --spherical, --defining");
      if (mono_defining) {
        const Multiset m = defining_rep_decomposition(*mono_defining, mono_samples, seed(), opt);
        emit(out, {{"n", *mono_defining}, {"decomposition", multiset_json(m)}, {"samples", mono_samples}, {"seed", seed()}});
        return 0;
      }
      std::function<MonodromyLoop(const TrackOptions&)> run;
      if (!mono_spec.empty()) {
        LoopSpec spec = parse_loop_spec(read_all(mono_spec));
        if (mono->count("--tolerance") == 0) opt.tolerance = spec.options.tolerance;
        if (mono->count("--max-step") == 0) opt.max_step = spec.options.max_step;
        run = [spec](const TrackOptions& o) {
          LoopSpec s = spec;
          s.options = o;
          return run_loop_spec(s);
        };
      } else if (!mono_generator.empty()) {
        run = [&](const TrackOptions& o) { return standard_generator_loop(mono_generator[0], mono_generator[1], o); };
      } else if (!mono_word.empty()) {
        const auto word = parse_word(mono_word);
        run = [word, &mono_n](const TrackOptions& o) { return generator_word_loop(mono_n, word, o); };
      } else {
        run = [&](const TrackOptions& o) { return generator_word_loop(*mono_spherical, spherical_word(*mono_spherical), o); };
      }
      const MonodromyLoop loop = run(opt);
      Json j = loop_json(loop);
      if (mono_refine) {
        TrackOptions fine = opt;
        fine.max_step /= 2;
        const auto again = run(fine);
        j["refinement_invariant"] = again.permutation == loop.permutation;
        emit(out, j);
        if (again.permutation != loop.permutation)
          throw ConsistencyError("monodromy: halving the step changed the permutation to " +
                                 cycle_notation(again.permutation));
        return 0;
      }
      emit(out, j);
      return 0;
    };
  });

  // brion-sweep / brion-boundary
  std::optional<int> sweep_n;
  std::string claims_text = "both";
  auto stream_records = [&](bool observational, const std::function<BrionSummary(const std::function<void(const BrionRecord&)>&)>& body) {
    const BrionSummary s = body([&](const BrionRecord& r) {
      if (out.human) render_record_human(*out.out, r);
      else *out.out << to_jsonl(r) << '\n';
    });
    *out.out << summary_jsonl(s, observational) << '\n';
    if (!observational && s.violations > 0) throw ConsistencyError("brion-sweep: " + std::to_string(s.violations) + " violations");
    return 0;
  };
  auto* bsweep = app.add_subcommand("brion-sweep", "exhaustive vanishing and equality checks up to n_max");
  bsweep->add_option("--n-max", sweep_n, "defaults to sweep_cap");
  bsweep->add_option("--claims", claims_text, "vanishing, equality or both");
  bsweep->callback([&] {
    action = [&] {
      const BrionClaims claims = parse_claims(claims_text);
      const int n_max = sweep_n.value_or(cfg.sweep_cap);
      return stream_records(false, [&](const auto& sink) { return sweep(n_max, claims, sink, cfg.sweep_cap, cfg.n_cap); });
    };
  });
  int boundary_n = 0;
  auto* bbound = app.add_subcommand("brion-boundary", "observational scan past |lambda| + |omega| <= n/2");
  bbound->add_option("n", boundary_n)->required();
  bbound->add_option("--claims", claims_text, "vanishing, equality or both");
  bbound->callback([&] {
    action = [&] {
      const BrionClaims claims = parse_claims(claims_text);
      return stream_records(true, [&](const auto& sink) { return boundary_scan(boundary_n, claims, sink, cfg.sweep_cap, cfg.n_cap); });
    };
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    error_line("usage", e.what());
    return 1;
  }

  try {
    cfg = load_config(config_path.empty() ? std::nullopt : std::optional<std::string>(config_path));
    out.open(output_path.empty() ? cfg.output : output_path);
    return action();
  } catch (const ConsistencyError& e) {
    error_line("consistency", e.what());
    return 2;
  } catch (const CapacityError& e) {
    error_line("capacity", e.what());
    return 1;
  } catch (const DomainError& e) {
    error_line("domain", e.what());
    return 1;
  } catch (const ContinuationError& e) {
    error_line("continuation", e.what());
    return 1;
  } catch (const SamplingError& e) {
    error_line("sampling", e.what());
    return 1;
  } catch (const std::exception& e) {
    error_line("internal", e.what());
    return 2;
  }
}
