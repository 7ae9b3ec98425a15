// Command-line front end: parses the group DSL, dispatches to the library,
// and emits one RunManifest per invocation (JSON by default, aligned text
// with --format text). Exit codes: 0 ok, 1 failed corpus checks, 2 usage or
// input errors.

#include <chrono>
#include <cstdlib>
#include <iostream>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

#include "CLI11.hpp"

#include "girthlab/checks.hpp"
#include "girthlab/corpus.hpp"
#include "girthlab/dsl.hpp"
#include "girthlab/errors.hpp"
#include "girthlab/genset.hpp"
#include "girthlab/girth.hpp"
#include "girthlab/hnn.hpp"
#include "girthlab/oracles.hpp"
#include "girthlab/subgroups.hpp"

using namespace girthlab;
using nlohmann::json;

namespace {

const char* kind_name(GirthKind k) {
  switch (k) {
    case GirthKind::Exact: return "exact";
    case GirthKind::LowerBound: return "lower-bound";
    case GirthKind::UpperBound: return "upper-bound";
    case GirthKind::LawDoesNotHold: return "law-does-not-hold";
  }
  return "?";
}

json words_json(const Alphabet& a, const std::vector<Word>& ws) {
  json arr = json::array();
  for (const Word& w : ws) arr.push_back(a.format(w));
  return arr;
}

json certificate_json(const GirthQuery& q, const GirthCertificate& c) {
  Alphabet rel = relation_alphabet(q.genset_size());
  json j;
  j["kind"] = kind_name(c.kind);
  j["value"] = c.value;
  j["witness"] = c.witness ? json(rel.format(*c.witness)) : json(nullptr);
  j["words-checked"] = c.words_checked;
  j["fingerprint"] = fingerprint_hex(c.query_fingerprint);
  j["requested-r"] = c.requested_r;
  j["truncated"] = c.truncated;
  j["note"] = c.note;
  j["generation"] = q.generation();
  j["max-len"] = q.max_len();
  j["description"] = q.description();
  return j;
}

// The query holds the target by pointer, so the ParsedSpec must stay alive
// for as long as the returned query is used.
GirthQuery build_query(const ParsedSpec& spec, const std::string& gens,
                       long long cap) {
  if (const auto* g = std::get_if<GroupOracle>(&spec))
    return GirthQuery::over_oracle(*g, parse_words(g->alphabet(), gens), cap);
  if (const auto* h = std::get_if<HnnExtension>(&spec)) {
    std::vector<HnnElement> elems;
    for (const Word& w : parse_words(h->ext_alphabet(), gens))
      elems.push_back(h->to_element(w));
    return GirthQuery::over_hnn(*h, std::move(elems), cap);
  }
  if (const auto* p = std::get_if<AmalgamPresentation>(&spec)) {
    std::vector<AmalgamElement> elems;
    std::istringstream list(gens);
    std::string piece;
    while (std::getline(list, piece, ';'))
      elems.push_back(parse_amalgam_element(*p, piece));
    return GirthQuery::over_amalgam(*p, std::move(elems), cap);
  }
  fail(ErrorCode::ValidationError,
       "girth needs a group, hnn, or amalgam target");
}

// side-tagged rendering that parse_amalgam_element accepts back
std::string amalgam_side_text(const AmalgamPresentation& p,
                              const AmalgamElement& e) {
  if (e.syllables.empty()) return "left 1";
  std::string out;
  for (const AmalgamSyllable& s : e.syllables) {
    if (!out.empty()) out += " | ";
    out += s.side == AmalgamSide::Left ? "left " : "right ";
    out += p.factor(s.side).alphabet().format(s.g);
  }
  return out;
}

json profile_json(const GensetProfile& p) {
  return {{"alpha", p.alpha},
          {"beta", p.beta},
          {"gamma", p.gamma},
          {"delta", p.delta},
          {"in-union", p.in_union()}};
}

// key: value rows with dotted paths for nesting, aligned on the colon.
void flatten(const json& j, const std::string& prefix,
             std::vector<std::pair<std::string, std::string>>& rows) {
  if (j.is_object()) {
    for (auto it = j.begin(); it != j.end(); ++it)
      flatten(it.value(), prefix.empty() ? it.key() : prefix + "." + it.key(),
              rows);
    return;
  }
  if (j.is_array()) {
    bool scalars = true;
    for (const json& e : j) scalars = scalars && !e.is_structured();
    if (scalars) {
      std::string joined;
      for (const json& e : j) {
        if (!joined.empty()) joined += "; ";
        joined += e.is_string() ? e.get<std::string>() : e.dump();
      }
      rows.emplace_back(prefix, joined);
    } else {
      for (size_t i = 0; i < j.size(); ++i)
        flatten(j[i], prefix + "[" + std::to_string(i) + "]", rows);
    }
    return;
  }
  rows.emplace_back(prefix,
                    j.is_string() ? j.get<std::string>() : j.dump());
}

void emit(const RunManifest& m, const std::string& format) {
  if (format == "json") {
    std::cout << manifest_json(m).dump(2) << "\n";
    return;
  }
  std::vector<std::pair<std::string, std::string>> rows;
  rows.emplace_back("command", m.command);
  for (const auto& [k, v] : m.inputs) rows.emplace_back(k, v);
  flatten(m.results, "", rows);
  rows.emplace_back("tool", m.tool);
  rows.emplace_back("corpus", m.corpus_checksum);
  std::ostringstream ms;
  ms.precision(1);
  ms << std::fixed << m.elapsed_ms;
  rows.emplace_back("elapsed-ms", ms.str());
  size_t width = 0;
  for (const auto& [k, v] : rows) width = std::max(width, k.size());
  for (const auto& [k, v] : rows)
    std::cout << k << std::string(width - k.size() + 2, ' ') << v << "\n";
}

std::vector<CorpusGroup> corpus_from(const std::string& dir_flag) {
  std::string dir = dir_flag;
  if (dir.empty())
    if (const char* env = std::getenv("GIRTHLAB_CORPUS")) dir = env;
  return dir.empty() ? bundled_corpus() : load_corpus(dir);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"girth certificates and generating-set searches for HNN "
               "extensions and amalgams"};
  app.require_subcommand(1);
  std::string format = "json";
  app.add_option("--format", format, "output format")
      ->check(CLI::IsMember({"json", "text"}))
      ->capture_default_str();
  app.set_version_flag("--version", std::string(kToolVersion));

  RunManifest manifest;
  int rc = 0;

  auto timed = [&](auto&& body) {
    auto start = std::chrono::steady_clock::now();
    body();
    manifest.elapsed_ms = std::chrono::duration<double, std::milli>(
                              std::chrono::steady_clock::now() - start)
                              .count();
  };
  auto stamp_bundled = [&] {
    manifest.corpus_checksum = fingerprint_hex(corpus_fingerprint(bundled_corpus()));
  };

  // parse -------------------------------------------------------------
  std::string spec_text;
  auto* cmd_parse = app.add_subcommand("parse", "parse a spec and classify it");
  cmd_parse->fallthrough();
  cmd_parse->add_option("--spec", spec_text, "spec text")->required();
  cmd_parse->callback([&] {
    manifest.command = "parse";
    manifest.inputs = {{"spec", spec_text}};
    stamp_bundled();
    timed([&] {
      ParsedSpec spec = parse_spec(spec_text);
      json r;
      r["description"] = describe(spec);
      if (const auto* g = std::get_if<GroupOracle>(&spec)) {
        r["kind"] = "group";
        r["order"] = g->order() ? json(*g->order()) : json(nullptr);
      } else if (const auto* s = std::get_if<SubgroupSpec>(&spec)) {
        r["kind"] = "subgroup";
        auto sub = make_subgroup(s->ambient, s->gens);
        auto index = sub->index();
        r["index"] = index ? json(*index) : json(nullptr);
        r["proper"] = sub->is_proper();
      } else if (const auto* h = std::get_if<HnnExtension>(&spec)) {
        r["kind"] = "hnn";
        r["class"] = hnn_class_name(h->classify());
      } else if (const auto* p = std::get_if<AmalgamPresentation>(&spec)) {
        r["kind"] = "amalgam";
        r["proper"] = p->is_proper();
      }
      manifest.results = std::move(r);
    });
  });

  // reduce ------------------------------------------------------------
  std::string target_text, word_text;
  auto* cmd_reduce =
      app.add_subcommand("reduce", "normal form of a word in the target");
  cmd_reduce->fallthrough();
  cmd_reduce->add_option("--target", target_text, "group, hnn, or amalgam spec")
      ->required();
  cmd_reduce->add_option("--word", word_text, "word to reduce")->required();
  cmd_reduce->callback([&] {
    manifest.command = "reduce";
    manifest.inputs = {{"target", target_text}, {"word", word_text}};
    stamp_bundled();
    timed([&] {
      ParsedSpec spec = parse_spec(target_text);
      manifest.inputs["target-parsed"] = describe(spec);
      json r;
      if (const auto* g = std::get_if<GroupOracle>(&spec)) {
        Word w = g->alphabet().parse(word_text);
        r["reduced"] = g->alphabet().format(g->canonical_word(w));
        r["normal-form"] = g->normal_form_string(w);
        r["identity"] = g->is_identity(w);
      } else if (const auto* h = std::get_if<HnnExtension>(&spec)) {
        HnnElement e =
            h->britton_reduce(h->to_element(h->ext_alphabet().parse(word_text)));
        r["reduced"] = h->ext_alphabet().format(h->to_word(e));
        r["t-length"] = e.t_length();
        r["identity"] = h->is_identity(e);
      } else if (const auto* p = std::get_if<AmalgamPresentation>(&spec)) {
        AmalgamElement e = parse_amalgam_element(*p, word_text);
        r["reduced"] = amalgam_side_text(*p, e);
        r["syllables"] = e.length();
        r["identity"] = p->is_identity(e);
      } else {
        fail(ErrorCode::ValidationError,
             "reduce needs a group, hnn, or amalgam target");
      }
      manifest.results = std::move(r);
    });
  });

  // girth / certify -----------------------------------------------------
  std::string gens_text;
  long long cap = 0, certify_r = 0;
  auto* cmd_girth =
      app.add_subcommand("girth", "exhaustive girth search over a target");
  cmd_girth->fallthrough();
  cmd_girth->add_option("--target", target_text, "target spec")->required();
  cmd_girth->add_option("--gens", gens_text, "generators, ';' separated")
      ->required();
  cmd_girth->add_option("--cap", cap, "search cap (0 picks one)");
  cmd_girth->add_option("--certify", certify_r,
                        "claim girth >= r instead of searching for the value");
  cmd_girth->callback([&] {
    manifest.command = "girth";
    manifest.inputs = {{"target", target_text},
                       {"gens", gens_text},
                       {"cap", std::to_string(cap)}};
    if (certify_r) manifest.inputs["certify"] = std::to_string(certify_r);
    stamp_bundled();
    timed([&] {
      ParsedSpec spec = parse_spec(target_text);
      manifest.inputs["target-parsed"] = describe(spec);
      long long effective = certify_r && !cap ? certify_r - 1 : cap;
      GirthQuery q = build_query(spec, gens_text, effective);
      GirthCertificate cert =
          certify_r ? certify_no_short_relation(q, certify_r, effective)
                    : girth_exact(q);
      manifest.results = certificate_json(q, cert);
    });
  });

  long long claim_r = 0;
  auto* cmd_certify = app.add_subcommand(
      "certify", "certify that no relation is shorter than r");
  cmd_certify->fallthrough();
  cmd_certify->add_option("--target", target_text, "target spec")->required();
  cmd_certify->add_option("--gens", gens_text, "generators, ';' separated")
      ->required();
  cmd_certify->add_option("--r", claim_r, "claimed lower bound")
      ->required()
      ->check(CLI::PositiveNumber);
  cmd_certify->add_option("--cap", cap, "search cap (0 means r-1)");
  cmd_certify->callback([&] {
    manifest.command = "certify";
    manifest.inputs = {{"target", target_text},
                       {"gens", gens_text},
                       {"r", std::to_string(claim_r)},
                       {"cap", std::to_string(cap)}};
    stamp_bundled();
    timed([&] {
      ParsedSpec spec = parse_spec(target_text);
      manifest.inputs["target-parsed"] = describe(spec);
      long long effective = cap ? cap : claim_r - 1;
      GirthQuery q = build_query(spec, gens_text, effective);
      GirthCertificate cert = certify_no_short_relation(q, claim_r, effective);
      manifest.results = certificate_json(q, cert);
    });
  });

  // witness -------------------------------------------------------------
  std::string family, left_gens, right_gens;
  long long witness_r = 0;
  auto* cmd_witness = app.add_subcommand(
      "witness", "build a separation witness family over a target");
  cmd_witness->fallthrough();
  cmd_witness->add_option("--family", family, "family shape")
      ->required()
      ->check(CLI::IsMember({"avoiding", "one-sided", "dihedral", "amalgam"}));
  cmd_witness->add_option("--target", target_text, "hnn or amalgam spec")
      ->required();
  cmd_witness->add_option("--gens", gens_text,
                          "base words, ';' separated (hnn families)");
  cmd_witness->add_option("--left-gens", left_gens,
                          "left factor words (amalgam family)");
  cmd_witness->add_option("--right-gens", right_gens,
                          "right factor words (amalgam family)");
  cmd_witness->add_option("--r", witness_r, "family parameter r")
      ->required()
      ->check(CLI::PositiveNumber);
  cmd_witness->callback([&] {
    manifest.command = "witness";
    manifest.inputs = {{"family", family},
                       {"target", target_text},
                       {"r", std::to_string(witness_r)}};
    if (!gens_text.empty()) manifest.inputs["gens"] = gens_text;
    if (!left_gens.empty()) manifest.inputs["left-gens"] = left_gens;
    if (!right_gens.empty()) manifest.inputs["right-gens"] = right_gens;
    stamp_bundled();
    timed([&] {
      ParsedSpec spec = parse_spec(target_text);
      manifest.inputs["target-parsed"] = describe(spec);
      json fam_json = json::array();
      if (family == "amalgam") {
        const auto* p = std::get_if<AmalgamPresentation>(&spec);
        if (!p)
          fail(ErrorCode::ValidationError,
               "the amalgam family needs an amalgam target");
        auto fam = build_amalgam_witness(
            *p, parse_words(p->left().alphabet(), left_gens),
            parse_words(p->right().alphabet(), right_gens), witness_r);
        for (const AmalgamElement& e : fam)
          fam_json.push_back(amalgam_side_text(*p, e));
      } else {
        const auto* h = std::get_if<HnnExtension>(&spec);
        if (!h)
          fail(ErrorCode::ValidationError,
               "the " + family + " family needs an hnn target");
        std::vector<HnnElement> fam;
        if (family == "avoiding")
          fam = build_witness_avoiding(
              *h, parse_words(h->base().alphabet(), gens_text), witness_r);
        else if (family == "one-sided")
          fam = build_witness_one_sided(
              *h, parse_words(h->base().alphabet(), gens_text), witness_r);
        else
          fam = build_witness_dihedral(*h, witness_r);
        for (const HnnElement& e : fam)
          fam_json.push_back(h->ext_alphabet().format(h->to_word(e)));
      }
      manifest.results = {{"family", fam_json}, {"count", fam_json.size()}};
    });
  });

  // genset --------------------------------------------------------------
  std::string a_text, b_text, mode = "avoid";
  auto* cmd_genset = app.add_subcommand(
      "genset", "generating set avoiding two proper subgroups");
  cmd_genset->fallthrough();
  cmd_genset->add_option("--group", target_text, "group spec")->required();
  cmd_genset->add_option("--A", a_text, "generators of A, ';' separated")
      ->required();
  cmd_genset->add_option("--B", b_text, "generators of B, ';' separated")
      ->required();
  cmd_genset->add_option("--mode", mode, "avoid or nearly")
      ->check(CLI::IsMember({"avoid", "nearly"}))
      ->capture_default_str();
  cmd_genset->callback([&] {
    manifest.command = "genset";
    manifest.inputs = {{"group", target_text},
                       {"A", a_text},
                       {"B", b_text},
                       {"mode", mode}};
    stamp_bundled();
    timed([&] {
      ParsedSpec spec = parse_spec(target_text);
      manifest.inputs["target-parsed"] = describe(spec);
      const auto* g = std::get_if<GroupOracle>(&spec);
      if (!g)
        fail(ErrorCode::ValidationError, "genset needs a group target");
      auto A = make_subgroup(*g, parse_words(g->alphabet(), a_text));
      auto B = make_subgroup(*g, parse_words(g->alphabet(), b_text));
      json r;
      if (mode == "avoid") {
        auto S = find_avoiding_genset(*g, *A, *B);
        if (S) {
          r["status"] = "found";
          r["S"] = words_json(g->alphabet(), *S);
          r["profile"] = profile_json(profile(*g, *A, *B, *S));
        } else {
          r["status"] = "obstructed";
          r["S"] = nullptr;
          r["note"] =
              "the complement of A and B does not generate; the group maps "
              "onto the Klein four-group";
        }
      } else {
        std::vector<Word> S = find_nearly_avoiding_genset(*g, *A, *B);
        r["status"] = "found";
        r["S"] = words_json(g->alphabet(), S);
        r["profile"] = profile_json(profile(*g, *A, *B, S));
      }
      manifest.results = std::move(r);
    });
  });

  // corpus --------------------------------------------------------------
  std::string corpus_dir, write_dir;
  std::vector<std::string> only;
  auto* cmd_corpus =
      app.add_subcommand("corpus", "run the bundled verification suite");
  cmd_corpus->fallthrough();
  cmd_corpus->add_option("--dir", corpus_dir,
                         "load corpus tables from this directory "
                         "(default: GIRTHLAB_CORPUS or bundled)");
  cmd_corpus->add_option("--only", only, "run only checks whose name contains this");
  cmd_corpus->add_option("--write", write_dir,
                         "write the bundled corpus to a directory and exit");
  cmd_corpus->callback([&] {
    manifest.command = "corpus";
    if (!write_dir.empty()) {
      manifest.inputs = {{"write", write_dir}};
      stamp_bundled();
      timed([&] {
        write_corpus(write_dir);
        manifest.results = {{"written", write_dir},
                            {"groups", bundled_corpus().size()}};
      });
      return;
    }
    manifest.inputs = {};
    if (!corpus_dir.empty()) manifest.inputs["dir"] = corpus_dir;
    for (size_t i = 0; i < only.size(); ++i)
      manifest.inputs["only[" + std::to_string(i) + "]"] = only[i];
    timed([&] {
      auto corpus = corpus_from(corpus_dir);
      manifest.corpus_checksum = fingerprint_hex(corpus_fingerprint(corpus));
      auto outcomes = run_checks(corpus, only);
      json arr = json::array();
      size_t passed = 0;
      for (const CheckOutcome& o : outcomes) {
        arr.push_back({{"name", o.name},
                       {"passed", o.passed},
                       {"message", o.message},
                       {"elapsed-ms", o.elapsed_ms},
                       {"budget-ms", o.budget_ms}});
        if (o.passed) ++passed;
      }
      manifest.results = {{"checks", arr},
                          {"passed", passed},
                          {"total", outcomes.size()}};
      if (passed != outcomes.size()) rc = 1;
    });
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
    json err = {{"error", {{"code", "UsageError"}, {"message", e.what()}}}};
    std::cerr << err.dump(2) << "\n";
    return 2;
  } catch (const Error& e) {
    json err = {{"error",
                 {{"code", error_code_name(e.code())}, {"message", e.what()}}}};
    std::cerr << err.dump(2) << "\n";
    return 2;
  } catch (const std::exception& e) {
    json err = {{"error", {{"code", "Internal"}, {"message", e.what()}}}};
    std::cerr << err.dump(2) << "\n";
    return 2;
  }

  emit(manifest, format);
  return rc;
}
