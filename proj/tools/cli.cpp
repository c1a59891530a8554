// Copyright 2026 The Noether Authors
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

#include "cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include "noether/builtins.hpp"
#include "noether/errors.hpp"
#include "noether/group_form.hpp"
#include "noether/io.hpp"
#include "noether/lattice_form.hpp"
#include "noether/series.hpp"
#include "noether/subfactor.hpp"
#include "noether/verifier.hpp"
#include "noether/zigzag.hpp"

namespace noether::cli {

namespace {

using Json = nlohmann::ordered_json;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Config {
  std::string format = "json";
  std::uint64_t budget = VerifyOptions{}.budget;
  std::size_t maxOrder = kMaxGroupOrder;
};

Json elements(const GroupForm& form, SubobjectRef x) {
  return form.subgroup(x).elements();
}

Json interval(const GroupForm& form, Interval x) {
  return Json::array({elements(form, x.lo), elements(form, x.hi)});
}

Json seriesJson(const GroupForm& form, const SubnormalSeries& s) {
  Json out = Json::array();
  for (const auto x : s.terms) out.push_back(elements(form, x));
  return out;
}

Json legsJson(const Form& form, const Zigzag& z) {
  Json out = Json::array();
  for (const auto& leg : z.legs()) {
    out.push_back({{"hom", form.describe(leg.hom)},
                   {"dir", leg.direction == LegDirection::kLeftward ? "L" : "R"}});
  }
  return out;
}

Json pairsJson(const std::vector<std::pair<std::size_t, std::size_t>>& pairs) {
  Json out = Json::array();
  for (const auto& [a, b] : pairs) out.push_back({a, b});
  return out;
}

// Indented "key: value" rendering of a JSON document.
void renderText(const Json& j, std::ostream& out, int indent) {
  const std::string pad(indent, ' ');
  for (const auto& [key, value] : j.items()) {
    const bool nested =
        value.is_object() ||
        (value.is_array() && !value.empty() &&
         (value.front().is_object() ||
          (value.front().is_array() && value.dump().size() > 72)));
    if (!nested) {
      out << pad << key << ": "
          << (value.is_string() ? value.get<std::string>() : value.dump())
          << "\n";
      continue;
    }
    out << pad << key << ":\n";
    if (value.is_object()) {
      renderText(value, out, indent + 2);
    } else {
      for (const auto& item : value) {
        if (item.is_object()) {
          renderText(item, out, indent + 2);
          out << pad << "  --\n";
        } else {
          out << pad << "  " << item.dump() << "\n";
        }
      }
    }
  }
}

void emit(const Config& cfg, const Json& j, std::ostream& out) {
  if (cfg.format == "text") {
    renderText(j, out, 0);
  } else {
    out << j.dump(2) << "\n";
  }
}

void requireNotDot(const Config& cfg) {
  if (cfg.format == "dot") {
    throw UsageError("--format dot is only available for subgroups");
  }
}

std::shared_ptr<GroupForm> groupForm(const Config& cfg,
                                     std::vector<FiniteGroup> groups) {
  return asGroupForm(std::move(groups), GroupFormOptions{cfg.maxOrder});
}

int cmdSubgroups(const Config& cfg, const std::string& ref, std::ostream& out) {
  const auto form = groupForm(cfg, {loadGroup(ref)});
  const ObjectId g{0};
  const auto fiber = fiberLattice(*form, g);
  const auto covers = fiber.covers();
  const auto& name = form->group(g).name();
  if (cfg.format == "dot") {
    out << "graph \"" << name << "\" {\n  rankdir=BT;\n"
        << "  node [shape=plaintext];\n";
    for (const auto x : fiber.elements()) {
      out << "  s" << x.id << " [label=\""
          << formatElements(form->subgroup(x)) << "\"];\n";
    }
    for (const auto& [a, b] : covers) {
      out << "  s" << a << " -- s" << b << ";\n";
    }
    out << "}\n";
    return kOk;
  }
  Json subs = Json::array();
  for (const auto x : fiber.elements()) {
    subs.push_back({{"id", x.id},
                    {"elements", elements(*form, x)},
                    {"order", form->subgroup(x).size()},
                    {"normal", form->normality(x).isNormal}});
  }
  Json j;
  j["group"] = name;
  j["order"] = form->group(g).order();
  j["subgroups"] = subs;
  j["covers"] = pairsJson({covers.begin(), covers.end()});
  emit(cfg, j, out);
  return kOk;
}

int cmdVerify(const Config& cfg, const std::vector<std::string>& refs,
              bool lattice, bool dual, std::ostream& out) {
  requireNotDot(cfg);
  std::shared_ptr<const Form> form;
  if (lattice) {
    std::vector<FiniteLattice> lattices;
    for (const auto& r : refs) lattices.push_back(loadLattice(r));
    form = asLatticeForm(std::move(lattices), refs);
  } else {
    std::vector<FiniteGroup> groups;
    for (const auto& r : refs) groups.push_back(loadGroup(r));
    form = groupForm(cfg, std::move(groups));
  }
  if (dual) form = dualize(form);
  VerifyOptions options;
  options.budget = cfg.budget;
  const auto axioms = verifyAxioms(*form, options);
  const auto theorems = verifyTheorems(*form, options);
  const bool ok = axioms.ok() && theorems.ok();
  if (cfg.format == "text") {
    out << axioms.toText() << theorems.toText();
  } else {
    Json j;
    j["instance"] = form->label();
    j["ok"] = ok;
    j["axioms"] = Json::parse(axioms.toJson());
    j["theorems"] = Json::parse(theorems.toJson());
    out << j.dump(2) << "\n";
  }
  return ok ? kOk : kCheckFailed;
}

Interval intervalArg(const GroupForm& form, const std::string& text) {
  const auto [lo, hi] = parseIntervalSpec(text);
  return {form.subobject(ObjectId{0}, lo), form.subobject(ObjectId{0}, hi)};
}

int cmdButterfly(const Config& cfg, const std::string& ref,
                 const std::string& xText, const std::string& yText,
                 std::ostream& out) {
  requireNotDot(cfg);
  const auto form = groupForm(cfg, {loadGroup(ref)});
  const auto x = intervalArg(*form, xText);
  const auto y = intervalArg(*form, yText);
  const auto r = butterfly(*form, x, y);
  Json j;
  j["group"] = form->group(ObjectId{0}).name();
  j["x"] = interval(*form, r.x);
  j["y"] = interval(*form, r.y);
  j["yx"] = interval(*form, r.yx);
  j["xy"] = interval(*form, r.xy);
  j["yxOntoXy"] = r.yxOntoXy;
  j["xyOntoYx"] = r.xyOntoYx;
  j["conormal"] = {r.conormalOK.first, r.conormalOK.second};
  j["subfactors"] = {r.subfactorsOK.first, r.subfactorsOK.second};
  j["zigzag"] = r.isoZigzag ? legsJson(*form, *r.isoZigzag) : Json::array();
  j["isoInduced"] = r.isoInduced;
  if (r.isoWitness) {
    j["isoWitness"] = {{"from", form->describe(r.isoWitness->domain)},
                       {"to", form->describe(r.isoWitness->codomain)},
                       {"map", form->elementMap(*r.isoWitness)}};
  } else {
    j["isoWitness"] = nullptr;
  }
  j["ok"] = r.ok();
  emit(cfg, j, out);
  return r.ok() ? kOk : kCheckFailed;
}

struct SeriesPair {
  std::shared_ptr<GroupForm> form;
  SubnormalSeries s;
  SubnormalSeries t;
};

SubnormalSeries toSeries(const GroupForm& form,
                         const std::vector<ElementList>& terms) {
  std::vector<SubobjectRef> refs;
  for (const auto& t : terms) refs.push_back(form.subobject(ObjectId{0}, t));
  return validateSeries(form, ObjectId{0}, std::move(refs));
}

SeriesPair loadSeriesPair(const Config& cfg, const std::string& a,
                          const std::string& b) {
  auto sa = loadSeries(a);
  auto sb = loadSeries(b);
  if (sa.group.table() != sb.group.table()) {
    throw UsageError("the two series live on different groups");
  }
  SeriesPair p{groupForm(cfg, {sa.group}), {}, {}};
  p.s = toSeries(*p.form, sa.terms);
  p.t = toSeries(*p.form, sb.terms);
  return p;
}

int cmdRefine(const Config& cfg, const std::string& a, const std::string& b,
              std::ostream& out) {
  requireNotDot(cfg);
  const auto p = loadSeriesPair(cfg, a, b);
  const auto r = refinePair(*p.form, p.s, p.t);
  auto raw = [&](const std::vector<SubobjectRef>& terms) {
    Json j = Json::array();
    for (const auto x : terms) j.push_back(elements(*p.form, x));
    return j;
  };
  Json j;
  j["group"] = p.form->group(ObjectId{0}).name();
  j["left"] = seriesJson(*p.form, r.left);
  j["right"] = seriesJson(*p.form, r.right);
  j["rawLeft"] = raw(r.rawLeft);
  j["rawRight"] = raw(r.rawRight);
  j["matching"] = pairsJson(r.matching);
  emit(cfg, j, out);
  return kOk;
}

int cmdProjiso(const Config& cfg, const std::string& a, const std::string& b,
               std::ostream& out) {
  requireNotDot(cfg);
  const auto p = loadSeriesPair(cfg, a, b);
  const auto iso = projectivelyIsomorphic(*p.form, p.s, p.t);
  Json j;
  j["projectivelyIsomorphic"] = iso.has_value();
  j["pairs"] = iso ? pairsJson(iso->pairs) : Json::array();
  emit(cfg, j, out);
  return iso ? kOk : kCheckFailed;
}

int cmdChase(const Config& cfg, const std::string& ref,
             const std::string& subgroupText, const std::string& direction,
             std::ostream& out) {
  requireNotDot(cfg);
  const auto spec = loadZigzag(ref);
  const auto form = groupForm(cfg, spec.groups);
  const auto z = buildZigzag(*form, spec);
  const bool backward = direction == "backward";
  const auto from = backward ? z.end() : z.start();
  const auto dir = backward ? ChaseDirection::kBackward : ChaseDirection::kForward;

  Json j;
  Json nodes = Json::array();
  for (const auto o : z.nodes()) nodes.push_back(form->describe(o));
  j["nodes"] = nodes;
  j["legs"] = legsJson(*form, z);
  j["direction"] = direction;
  Json table = Json::array();
  if (!subgroupText.empty()) {
    const auto x = form->subobject(from, parseElementList(subgroupText));
    table.push_back({elements(*form, x), elements(*form, chase(*form, z, x, dir))});
  } else {
    for (const auto x : fiberLattice(*form, from).elements()) {
      table.push_back(
          {elements(*form, x), elements(*form, chase(*form, z, x, dir))});
    }
  }
  j["chase"] = table;
  const auto induced = inducesHom(*form, z);
  j["inducesHom"] = induced.has_value();
  if (induced && induced->hom) {
    j["inducedMap"] = form->elementMap(*induced->hom);
  }
  j["inducesIso"] = inducesIso(*form, z);
  emit(cfg, j, out);
  return kOk;
}

int cmdCounterexample(const Config& cfg, std::ostream& out) {
  requireNotDot(cfg);
  const auto form = groupForm(cfg, {builtinGroup("Z6")});
  const ObjectId g{0};
  auto sub = [&](ElementList e) { return form->subobject(g, e); };
  const auto top = form->top(g);
  const auto bottom = form->bottom(g);
  const auto three = sub({0, 2, 4});
  const auto two = sub({0, 3});
  const auto s = validateSeries(*form, g, {top, bottom});
  const auto t = validateSeries(*form, g, {top, three, bottom});
  const Interval ystep{bottom, three};
  const Interval upper{two, top};
  const Interval whole{bottom, top};

  const auto intoUpper = projectInterval(*form, ystep, upper);
  const auto intoWhole = projectInterval(*form, ystep, whole);
  const auto refinement = refinePair(*form, s, t);
  const auto e1 = e1Check(*form, s, t, upper, 0, 1);
  const auto coarse = coarsestCheck(*form, s, t);

  Json diamond;
  Json subs = Json::array();
  for (const auto x : fiberLattice(*form, g).elements()) {
    subs.push_back(elements(*form, x));
  }
  diamond["subgroups"] = subs;
  diamond["covers"] = pairsJson([&] {
    const auto c = fiberLattice(*form, g).covers();
    return std::vector<std::pair<std::size_t, std::size_t>>(c.begin(), c.end());
  }());

  Json j;
  j["group"] = "Z6";
  j["diamond"] = diamond;
  j["seriesX"] = seriesJson(*form, s);
  j["seriesY"] = seriesJson(*form, t);
  j["projections"] = Json::array(
      {{{"interval", interval(*form, ystep)},
        {"into", interval(*form, upper)},
        {"result", interval(*form, intoUpper)}},
       {{"interval", interval(*form, ystep)},
        {"into", interval(*form, whole)},
        {"result", interval(*form, intoWhole)}}});
  j["refinement"] = {{"left", seriesJson(*form, refinement.left)},
                     {"right", seriesJson(*form, refinement.right)}};
  j["e1"] = {{"candidate", interval(*form, upper)},
             {"projectingSubfactor", interval(*form, e1.witness)},
             {"projection", interval(*form, e1.projection)},
             {"contained", e1.contained}};
  Json coarsest;
  coarsest["coarsest"] = coarse.coarsest;
  if (coarse.witness) {
    coarsest["witness"] = {seriesJson(*form, coarse.witness->first),
                           seriesJson(*form, coarse.witness->second)};
  }
  j["coarsestRefinement"] = coarsest;
  const bool reproduced = intoUpper == upper && intoWhole == ystep &&
                          !e1.contained && !coarse.coarsest;
  j["reproduced"] = reproduced;
  emit(cfg, j, out);
  return reproduced ? kOk : kCheckFailed;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Subfactor calculus and axiom checks for noetherian forms",
               "noether"};
  app.fallthrough();
  app.require_subcommand(1, 1);
  Config cfg;
  app.add_option("--format", cfg.format, "json, text or dot")
      ->check(CLI::IsMember({"json", "text", "dot"}));
  app.add_option("--budget", cfg.budget, "tuple budget for verification");
  app.add_option("--max-order", cfg.maxOrder, "largest accepted group order")
      ->check(CLI::Range(std::size_t{1}, kMaxGroupOrder));

  std::string groupRef, xText, yText, seriesA, seriesB, zigzagRef,
      subgroupText, direction = "forward";
  std::vector<std::string> refs;
  bool lattice = false, dual = false;

  auto* subgroups = app.add_subcommand("subgroups", "subgroup lattice of a group");
  subgroups->add_option("group", groupRef, "builtin:NAME or group file")
      ->required();

  auto* verify = app.add_subcommand("verify", "axiom and theorem checks");
  verify->add_option("inputs", refs, "groups (or lattices with --lattice)")
      ->required();
  verify->add_flag("--lattice", lattice, "inputs are lattices");
  verify->add_flag("--dual", dual, "verify the dual form");

  auto* fly = app.add_subcommand("butterfly", "butterfly report for two subfactors");
  fly->add_option("group", groupRef)->required();
  fly->add_option("--x", xText, "[[lo elements], [hi elements]]")->required();
  fly->add_option("--y", yText, "[[lo elements], [hi elements]]")->required();

  auto* refine = app.add_subcommand("refine", "refine two subnormal series");
  refine->add_option("first", seriesA)->required();
  refine->add_option("second", seriesB)->required();

  auto* projiso = app.add_subcommand("projiso", "projective isomorphism test");
  projiso->add_option("first", seriesA)->required();
  projiso->add_option("second", seriesB)->required();

  auto* chaseCmd = app.add_subcommand("chase", "chase subgroups along a zigzag");
  chaseCmd->add_option("zigzag", zigzagRef)->required();
  chaseCmd->add_option("--subgroup", subgroupText, "element list to chase");
  chaseCmd->add_option("--direction", direction)
      ->check(CLI::IsMember({"forward", "backward"}));

  auto* counter = app.add_subcommand(
      "counterexample", "refutation of the strong refinement claims on Z6");

  std::vector<std::string> argvStore{"noether"};
  argvStore.insert(argvStore.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (auto& a : argvStore) argv.push_back(a.data());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*subgroups) return cmdSubgroups(cfg, groupRef, out);
    if (*verify) return cmdVerify(cfg, refs, lattice, dual, out);
    if (*fly) return cmdButterfly(cfg, groupRef, xText, yText, out);
    if (*refine) return cmdRefine(cfg, seriesA, seriesB, out);
    if (*projiso) return cmdProjiso(cfg, seriesA, seriesB, out);
    if (*chaseCmd) {
      return cmdChase(cfg, zigzagRef, subgroupText, direction, out);
    }
    if (*counter) return cmdCounterexample(cfg, out);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const ValidationError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const UnsupportedError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const BudgetError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const Error& e) {
    err << "check failed: " << e.what() << "\n";
    return kCheckFailed;
  }
  return kUsage;
}

}  // namespace noether::cli
