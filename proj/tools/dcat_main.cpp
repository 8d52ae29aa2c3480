// dcat: inspect and verify finite double categories.
//
// Exit codes: 0 = pass / decision true, 1 = violations / decision false,
// 2 = usage or input errors.

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "dcat/framed.hpp"
#include "dcat/io.hpp"
#include "dcat/length.hpp"
#include "dcat/pi2.hpp"

namespace {

using namespace dcat;

struct Output {
  bool machine = false;
  nlohmann::json block = nlohmann::json::object();

  void line(const std::string& key, const std::string& value) {
    std::cout << key << ": " << value << "\n";
    block[key] = value;
  }
  void line(const std::string& key, const char* value) { line(key, std::string(value)); }
  template <typename T>
    requires std::integral<T> && (!std::same_as<T, bool>)
  void line(const std::string& key, T value) {
    std::cout << key << ": " << static_cast<std::int64_t>(value) << "\n";
    block[key] = static_cast<std::int64_t>(value);
  }
  void line(const std::string& key, bool value) {
    std::cout << key << ": " << (value ? "true" : "false") << "\n";
    block[key] = value;
  }
  void finish() {
    if (machine) std::cout << "machine: " << block.dump() << "\n";
  }
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(Err::Usage, "cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(Err::Usage, "cannot write " + path);
  out << text;
}

int report_violations(Output& out, const std::string& what, const ValidationReport& rep,
                      const std::string& witnesses) {
  out.line(what + ".violations", static_cast<std::int64_t>(rep.violations.size()));
  out.line(what + ".tuples_checked", static_cast<std::int64_t>(rep.tuples_checked));
  out.line(what + ".mode", rep.mode);
  std::size_t limit = witnesses == "all" ? rep.violations.size()
                      : witnesses == "none" ? 0
                                            : std::min<std::size_t>(1, rep.violations.size());
  nlohmann::json vs = nlohmann::json::array();
  for (std::size_t i = 0; i < rep.violations.size(); ++i) {
    const Violation& v = rep.violations[i];
    nlohmann::json one;
    one["law"] = v.law;
    one["witness"] = v.witness;
    one["detail"] = v.detail;
    vs.push_back(one);
    if (i < limit) {
      std::ostringstream ss;
      ss << v.law << " [";
      for (std::size_t k = 0; k < v.witness.size(); ++k) ss << (k ? " " : "") << v.witness[k];
      ss << "]" << (v.detail.empty() ? "" : " " + v.detail);
      std::cout << what << ".violation[" << i << "]: " << ss.str() << "\n";
    }
  }
  out.block[what + ".violation_list"] = vs;
  return rep.ok() ? 0 : 1;
}

std::shared_ptr<const DoubleCat> load_double_cat(const std::string& path) {
  Document doc = parse_document(read_file(path));
  auto c = document_double_category(doc);
  if (!c) throw Error(Err::Usage, path + " does not denote a double category");
  return c;
}

int cmd_validate(const std::string& path, Output& out, const ValidateOptions& opt,
                 const std::string& witnesses) {
  Document doc = parse_document(read_file(path));
  switch (doc.kind) {
    case DocKind::Category:
      out.line("kind", "category");
      return report_violations(out, "category", validate_category(*doc.category), witnesses);
    case DocKind::TwoCategory:
      out.line("kind", "two_category");
      return report_violations(out, "two_category", validate_two_category(*doc.two_category, opt),
                               witnesses);
    case DocKind::Decorated: {
      out.line("kind", "decorated");
      ValidationReport rep = validate_decoration(*doc.decorated);
      rep.merge(validate_two_category(*doc.decorated->two_cat, opt));
      rep.merge(validate_category(doc.decorated->vertical));
      return report_violations(out, "decorated", rep, witnesses);
    }
    case DocKind::Indexing: {
      out.line("kind", "indexing");
      ValidationReport rep = validate_indexing(*doc.indexing);
      rep.merge(validate_two_category(*doc.indexing->base.two_cat, opt));
      rep.merge(validate_category(doc.indexing->base.vertical));
      return report_violations(out, "indexing", rep, witnesses);
    }
    case DocKind::DoubleCategory:
    case DocKind::InstanceSpec: {
      out.line("kind", doc.kind == DocKind::DoubleCategory ? "double_category" : "instance_spec");
      auto c = document_double_category(doc);
      out.line("squares", c->square_count());
      return report_violations(out, "double_category", validate_double_category(*c, opt), witnesses);
    }
  }
  return 2;
}

int cmd_pi2(const std::string& path, int object, Output& out) {
  auto c = load_double_cat(path);
  const FiniteCategory& c0 = c->vertical_category();
  int rc = 0;
  for (ObjId a = 0; a < c0.object_count(); ++a) {
    if (object >= 0 && a != object) continue;
    Pi2Monoid m = pi2_monoid(*c, a);
    out.line("pi2[" + std::to_string(a) + "].size", m.presentation.size);
    ValidationReport eh = eckmann_hilton_check(*c, a);
    out.line("pi2[" + std::to_string(a) + "].eckmann_hilton", eh.ok());
    if (!eh.ok()) rc = 1;
    std::ostringstream elems;
    for (std::size_t i = 0; i < m.elements.size(); ++i) elems << (i ? " " : "") << m.elements[i];
    out.line("pi2[" + std::to_string(a) + "].elements", elems.str());
  }
  return rc;
}

int cmd_induce(const std::string& path, const std::string& direction, const std::string& save,
               Output& out, const std::string& witnesses) {
  auto c = load_double_cat(path);
  Pi2Indexing phi = direction == "indexing" ? induce_indexing(c) : induce_opindexing(c);
  out.line("direction", direction);
  for (ObjId a = 0; a < c->vertical_category().object_count(); ++a)
    out.line("pi2[" + std::to_string(a) + "].size", phi.monoids[a].presentation.size);
  int rc = report_violations(out, "indexing", validate_indexing(phi), witnesses);
  rc |= report_violations(out, "induces", check_induces(*c, phi), witnesses);
  if (!save.empty()) write_file(save, serialize_indexing(phi));
  return rc;
}

int cmd_crossprod(const std::string& path, const std::string& direction, Output& out,
                  const ValidateOptions& opt, const std::string& witnesses) {
  Document doc = parse_document(read_file(path));
  Pi2Indexing phi;
  std::shared_ptr<const DoubleCat> base_dc;
  if (doc.kind == DocKind::Indexing) {
    phi = *doc.indexing;
  } else {
    base_dc = document_double_category(doc);
    if (!base_dc) throw Error(Err::Usage, "crossprod expects an indexing or a double category");
    phi = direction == "indexing" ? induce_indexing(base_dc) : induce_opindexing(base_dc);
  }
  CrossedProduct q = build_crossed_product(phi);
  out.line("globular_squares", q.dc->globular_count());
  out.line("triple_classes", q.dc->class_count());
  out.line("nu_one_step_complete", q.dc->nu_one_step_complete());
  int rc = report_violations(out, "double_category", validate_double_category(*q.dc, opt), witnesses);
  DecoratedTwoCategory h = decorated_horizontalization(q.dc);
  out.line("hstar_equals_base", decorated_equal(h, q.phi.base));
  ValidationReport ind = check_induces(*q.dc, rebase_indexing(q.phi, q.dc));
  rc |= report_violations(out, "induces", ind, witnesses);
  LengthOneDecision len = is_length_one(*q.dc, opt);
  out.line("length_one", len.length_one);
  if (!len.length_one) rc = 1;
  return rc;
}

int cmd_framed(const std::string& path, bool classify, Output& out, const std::string& witnesses) {
  auto c = load_double_cat(path);
  if (classify) {
    const FiniteCategory& c0 = c->vertical_category();
    std::ostringstream ff, ad;
    for (VertId f = 0; f < c0.morphism_count(); ++f) {
      if (is_fully_faithful_morphism(*c, f)) ff << f << " ";
      if (is_absolutely_dense_morphism(*c, f)) ad << f << " ";
    }
    out.line("fully_faithful_morphisms", ff.str());
    out.line("absolutely_dense_morphisms", ad.str());
    return 0;
  }
  FramedReport rep = is_framed(*c);
  out.line("framed", rep.framed);
  out.line("normal", rep.normal);
  out.line("split", rep.split);
  report_violations(out, "niches", rep.violations, witnesses);
  return rep.framed ? 0 : 1;
}

int cmd_length(const std::string& path, Output& out, const ValidateOptions& opt) {
  auto c = load_double_cat(path);
  GammaPiece gamma = globularly_generated_piece(*c, opt);
  out.line("gamma_squares", static_cast<std::int64_t>(gamma.squares.size()));
  LengthOneDecision len = is_length_one(*c, opt);
  out.line("length_one", len.length_one);
  if (len.witness) out.line("length_witness", *len.witness);
  CanonicalAllDecision can = all_squares_canonical(*c, opt);
  out.line("all_squares_canonical", can.all_canonical);
  if (can.witness) out.line("canonical_witness", *can.witness);
  return len.length_one ? 0 : 1;
}

int cmd_evalcheck(const std::string& path, const std::string& direction, Output& out,
                  const ValidateOptions& opt, const std::string& witnesses) {
  auto c = load_double_cat(path);
  Pi2Indexing phi = direction == "indexing" ? induce_indexing(c) : induce_opindexing(c);
  CrossedProduct q = build_crossed_product(phi);
  DoubleFunctorTable bang = evaluation_functor(q, c);
  EvalCheckOptions eopt;
  eopt.validate = opt;
  int rc = report_violations(out, "eval", check_eval_properties(bang, q, *c, eopt), witnesses);
  Pi2Indexing phi_cp = direction == "indexing" ? induce_indexing(q.dc) : induce_opindexing(q.dc);
  rc |= report_violations(out, "indexing_morphism", check_indexing_morphism(bang, phi_cp, phi),
                          witnesses);
  InjectivityDecision inj = check_eval_injective(bang, q, *c);
  out.line("injective", inj.injective);
  if (!inj.injective) {
    out.line("witness_first", inj.first);
    out.line("witness_second", inj.second);
    out.line("witness_image", inj.image);
  }
  return rc;
}

int cmd_witness(const std::string& path, Output& out) {
  auto c = load_double_cat(path);
  NonInjectivityWitness w = find_noninjectivity_witness(c);
  out.line("found", w.found);
  if (w.found) {
    out.line("vertical", w.vertical);
    out.line("first_down", w.first_down);
    out.line("first_up", w.first_up);
    out.line("second_down", w.second_down);
    out.line("second_up", w.second_up);
    out.line("image", w.image);
  }
  return w.found ? 0 : 1;
}

int cmd_instance(const InstanceSpec& spec, const std::string& save, bool spec_only, Output& out,
                 const ValidateOptions& opt) {
  auto c = build_instance(spec);
  out.line("squares", c->square_count());
  out.line("verticals", c->vertical_category().morphism_count());
  out.line("hcells", c->hcell_count());
  if (!save.empty()) {
    const std::uint64_t n = static_cast<std::uint64_t>(c->square_count());
    if (spec_only || n * n > opt.max_tuples)
      write_file(save, serialize_instance_spec(spec));
    else
      write_file(save, serialize_double_category(*c, opt));
    out.line("written", save);
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"finite double category toolkit"};
  app.require_subcommand(1);
  app.fallthrough();  // global flags may follow the subcommand

  std::string file, direction = "opindexing", witnesses = "first", save;
  std::uint64_t budget = ValidateOptions{}.max_tuples;
  bool machine = false, classify = false, spec_only = false;
  int object = -1;

  app.add_flag("--machine", machine, "emit a machine-readable JSON block");
  app.add_option("--witnesses", witnesses, "violation witnesses to print: none|first|all")
      ->check(CLI::IsMember({"none", "first", "all"}));
  app.add_option("--budget", budget, "enumeration cap override");

  auto* validate = app.add_subcommand("validate", "check every law of a document");
  validate->add_option("file", file)->required();

  auto* pi2 = app.add_subcommand("pi2", "identity-boundary square monoids");
  pi2->add_option("file", file)->required();
  pi2->add_option("--object", object, "restrict to one object");

  auto* induce = app.add_subcommand("induce", "extract the induced (op)indexing");
  induce->add_option("file", file)->required();
  induce->add_option("--direction", direction)->check(CLI::IsMember({"indexing", "opindexing"}));
  induce->add_option("-o,--output", save, "write the indexing document");

  auto* crossprod = app.add_subcommand("crossprod", "build and verify the crossed product");
  crossprod->add_option("file", file)->required();
  crossprod->add_option("--direction", direction)->check(CLI::IsMember({"indexing", "opindexing"}));

  auto* framed = app.add_subcommand("framed", "bifibration check or frame classification");
  framed->add_option("file", file)->required();
  framed->add_flag("--classify", classify, "list fully faithful / absolutely dense morphisms");

  auto* length = app.add_subcommand("length", "globularly generated piece and length-one test");
  length->add_option("file", file)->required();

  auto* evalcheck = app.add_subcommand("evalcheck", "evaluation functor checks");
  evalcheck->add_option("file", file)->required();
  evalcheck->add_option("--direction", direction)->check(CLI::IsMember({"indexing", "opindexing"}));

  auto* witness = app.add_subcommand("witness", "search for an evaluation non-injectivity witness");
  witness->add_option("file", file)->required();

  auto* instance = app.add_subcommand("instance", "build a named instance");
  std::string kind, restriction = "none", monoid = "z2", category = "path2";
  int n = 2, apex = 2;
  bool twisted = false;
  instance->add_option("kind", kind)->required();
  instance->add_option("-n,--size", n);
  instance->add_option("--apex", apex);
  instance->add_option("--restriction", restriction)
      ->check(CLI::IsMember({"none", "star", "tilde", "hat"}));
  instance->add_option("--monoid", monoid);
  instance->add_option("--category", category);
  instance->add_flag("--twisted", twisted, "inversion monodromy for group double groupoids");
  instance->add_option("-o,--output", save, "write a document");
  instance->add_flag("--spec-only", spec_only, "write an instance_spec document");

  CLI11_PARSE(app, argc, argv);

  Output out;
  out.machine = machine;
  ValidateOptions opt;
  opt.max_tuples = budget;

  int rc = 2;
  try {
    if (*validate) rc = cmd_validate(file, out, opt, witnesses);
    if (*pi2) rc = cmd_pi2(file, object, out);
    if (*induce) rc = cmd_induce(file, direction, save, out, witnesses);
    if (*crossprod) rc = cmd_crossprod(file, direction, out, opt, witnesses);
    if (*framed) rc = cmd_framed(file, classify, out, witnesses);
    if (*length) rc = cmd_length(file, out, opt);
    if (*evalcheck) rc = cmd_evalcheck(file, direction, out, opt, witnesses);
    if (*witness) rc = cmd_witness(file, out);
    if (*instance)
      rc = cmd_instance(parse_instance_spec(kind, restriction, n, apex, monoid, category, twisted),
                        save, spec_only, out, opt);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  out.finish();
  return rc;
}
