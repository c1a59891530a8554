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

#include "noether/verifier.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <memory>
#include <set>
#include <sstream>

#include <json.hpp>

#include "noether/errors.hpp"
#include "noether/oracle.hpp"
#include "noether/subfactor.hpp"
#include "noether/zigzag.hpp"

namespace noether {

namespace {

using Clock = std::chrono::steady_clock;

class Budget {
 public:
  explicit Budget(std::uint64_t limit) : remaining_(limit) {}
  bool take(std::uint64_t n) {
    if (n > remaining_) {
      remaining_ = 0;
      return false;
    }
    remaining_ -= n;
    return true;
  }
  bool exhausted() const { return remaining_ == 0; }

 private:
  std::uint64_t remaining_;
};

// One named check. Loops call tick() per tuple and stop when it returns
// false (budget gone) or after fail().
class Check {
 public:
  Check(std::string name, Budget& budget) : budget_(budget) {
    result_.name = std::move(name);
  }

  bool tick(std::uint64_t n = 1) {
    if (failed_ || starved_) return false;
    if (!budget_.take(n)) {
      starved_ = true;
      return false;
    }
    result_.tuples += n;
    return true;
  }

  void fail(std::string witness, std::string detail = {}) {
    if (failed_) return;
    failed_ = true;
    result_.witness = std::move(witness);
    result_.detail = std::move(detail);
  }

  bool done() const { return failed_ || starved_; }

  void skip(std::string why) {
    skipped_ = true;
    result_.detail = std::move(why);
  }

  CheckResult finish() {
    if (failed_) {
      result_.status = CheckStatus::kFail;
    } else if (starved_ || skipped_) {
      result_.status = CheckStatus::kSkipped;
      if (starved_) {
        result_.detail = "budget exhausted after " +
                         std::to_string(result_.tuples) + " tuples";
      }
    }
    return result_;
  }

 private:
  Budget& budget_;
  CheckResult result_;
  bool failed_ = false;
  bool starved_ = false;
  bool skipped_ = false;
};

std::string show(const Form& form, SubobjectRef x) {
  return toString(x) + " = " + form.describe(x);
}

std::string show(const Form& form, MorphismRef f) {
  return toString(f) + " = " + form.describe(f);
}

template <class... Parts>
std::string witness(const Form& form, const Parts&... parts) {
  std::string out;
  auto add = [&](const auto& part) {
    if (!out.empty()) out += "; ";
    if constexpr (std::is_convertible_v<decltype(part), std::string>) {
      out += part;
    } else {
      out += show(form, part);
    }
  };
  (add(parts), ...);
  return out;
}

// Per-object tables reused across theorem checks.
struct ObjectData {
  ObjectId object;
  std::vector<SubobjectRef> fiber;
  std::vector<char> normal;
  std::vector<char> conormal;
  std::vector<char> relNormal;  // n x n, [a][b] = a normal to b

  std::size_t n() const { return fiber.size(); }
  bool rel(std::size_t a, std::size_t b) const {
    return relNormal[a * n() + b];
  }
};

ObjectData objectData(const Form& form, ObjectId o, bool withRelative) {
  ObjectData d{o, fiberLattice(form, o).elements(), {}, {}, {}};
  for (const auto x : d.fiber) {
    const auto nm = form.normality(x);
    d.normal.push_back(nm.isNormal);
    d.conormal.push_back(nm.isConormal);
  }
  if (withRelative) {
    d.relNormal.resize(d.n() * d.n());
    for (std::size_t a = 0; a < d.n(); ++a) {
      for (std::size_t b = 0; b < d.n(); ++b) {
        d.relNormal[a * d.n() + b] = relativeNormal(form, d.fiber[a], d.fiber[b]);
      }
    }
  }
  return d;
}

bool sameImages(const Form& form, MorphismRef a, MorphismRef b) {
  if (a.domain != b.domain || a.codomain != b.codomain) return false;
  const auto ia = images(form, a);
  const auto ib = images(form, b);
  if (ia.direct != ib.direct || ia.inverse != ib.inverse) return false;
  if (const auto* view = form.elementView()) {
    return view->elementMap(a) == view->elementMap(b);
  }
  return true;
}

}  // namespace

std::string toString(CheckStatus status) {
  switch (status) {
    case CheckStatus::kPass:
      return "pass";
    case CheckStatus::kFail:
      return "fail";
    case CheckStatus::kSkipped:
      return "skipped";
  }
  return "unknown";
}

bool ConformanceReport::ok() const {
  return std::none_of(checks.begin(), checks.end(), [](const auto& c) {
    return c.status == CheckStatus::kFail;
  });
}

const CheckResult* ConformanceReport::find(const std::string& name) const {
  for (const auto* list : {&checks, &observations}) {
    for (const auto& c : *list) {
      if (c.name == name) return &c;
    }
  }
  return nullptr;
}

std::string ConformanceReport::toJson(bool includeTiming) const {
  using Json = nlohmann::ordered_json;
  auto encode = [](const std::vector<CheckResult>& list) {
    Json out = Json::array();
    for (const auto& c : list) {
      Json item;
      item["name"] = c.name;
      item["status"] = toString(c.status);
      item["tuples"] = c.tuples;
      if (!c.witness.empty()) item["witness"] = c.witness;
      if (!c.detail.empty()) item["detail"] = c.detail;
      out.push_back(std::move(item));
    }
    return out;
  };
  Json j;
  j["instance"] = instance;
  j["morphismFamily"] = morphismFamily;
  j["oracle"] = oracle;
  j["ok"] = ok();
  j["checks"] = encode(checks);
  j["observations"] = encode(observations);
  j["tuplesChecked"] = tuplesChecked;
  if (includeTiming) j["elapsedMs"] = elapsedMs;
  return j.dump(2);
}

std::string ConformanceReport::toText() const {
  std::ostringstream out;
  out << instance << "\n  morphisms: " << morphismFamily
      << "\n  oracle: " << oracle << "\n";
  auto line = [&](const CheckResult& c, const char* prefix) {
    out << "  " << prefix << toString(c.status) << "  " << c.name << " ("
        << c.tuples << " tuples)";
    if (!c.detail.empty()) out << " " << c.detail;
    out << "\n";
    if (!c.witness.empty()) out << "      witness: " << c.witness << "\n";
  };
  for (const auto& c : checks) line(c, "");
  for (const auto& c : observations) line(c, "observed ");
  out << (ok() ? "OK" : "FAILED") << " after " << tuplesChecked
      << " tuples\n";
  return out.str();
}

MorphismFamily buildMorphismFamily(const Form& form, std::size_t cap) {
  MorphismFamily family;
  std::set<MorphismRef> seen;
  bool truncated = false;
  auto add = [&](MorphismRef f) {
    if (seen.count(f)) return;
    if (family.morphisms.size() >= cap) {
      truncated = true;
      return;
    }
    seen.insert(f);
    family.morphisms.push_back(f);
  };

  for (const auto o : form.baseObjects()) {
    add(form.identity(o));
    for (const auto x : fiberLattice(form, o).elements()) {
      if (auto e = form.embedding(x)) add(*e);
      if (auto p = form.projection(x)) add(*p);
    }
  }
  for (const auto f : form.registeredMorphisms()) add(f);

  const auto seeds = family.morphisms;
  for (const auto f : seeds) {
    const auto parts = form.factorize(f);
    add(parts.projectionPart);
    add(parts.isoPart);
    add(parts.embeddingPart);
  }

  const auto level1 = family.morphisms;
  std::vector<MorphismRef> pairs;
  for (const auto f : level1) {
    for (const auto g : level1) {
      if (g.domain != f.codomain) continue;
      const auto gf = form.compose(g, f);
      pairs.push_back(gf);
      add(gf);
    }
  }
  for (const auto gf : pairs) {
    for (const auto h : level1) {
      if (h.domain == gf.codomain) add(form.compose(h, gf));
    }
  }

  std::set<ObjectId> objects;
  for (const auto f : family.morphisms) {
    objects.insert(f.domain);
    objects.insert(f.codomain);
  }
  family.objects.assign(objects.begin(), objects.end());
  family.label =
      "identities, embeddings and projections of base subobjects, "
      "registered morphisms, their factorization parts and composites of "
      "length 2-3: " +
      std::to_string(family.morphisms.size()) + " morphisms on " +
      std::to_string(family.objects.size()) + " objects" +
      (truncated ? " (truncated at " + std::to_string(cap) + ")" : "");
  return family;
}

ConformanceReport verifyAxioms(const Form& form, VerifyOptions options) {
  const auto started = Clock::now();
  Budget budget(options.budget);
  const auto family = buildMorphismFamily(form, options.maxFamily);
  const auto oracle = makeOracle(form);
  ConformanceReport report;
  report.instance = form.label();
  report.morphismFamily = family.label;
  report.oracle = oracle ? oracle->name() : "none";

  std::vector<ObjectData> data;
  for (const auto o : family.objects) {
    data.push_back(objectData(form, o, false));
  }

  {
    Check c("fiber-lattice", budget);
    for (const auto& d : data) {
      const auto bot = form.bottom(d.object);
      const auto top = form.top(d.object);
      for (const auto a : d.fiber) {
        if (!c.tick()) break;
        if (!form.leq(bot, a) || !form.leq(a, top)) {
          c.fail(witness(form, a), "bottom or top is not extreme");
        }
        if (!form.leq(a, a)) c.fail(witness(form, a), "not reflexive");
      }
      for (const auto a : d.fiber) {
        for (const auto b : d.fiber) {
          if (!c.tick(d.n())) break;
          if (a != b && form.leq(a, b) && form.leq(b, a)) {
            c.fail(witness(form, a, b), "not antisymmetric");
          }
          const auto m = form.meet(a, b);
          const auto j = form.join(a, b);
          if (!form.leq(m, a) || !form.leq(m, b)) {
            c.fail(witness(form, a, b, m), "meet is not a lower bound");
          }
          if (!form.leq(a, j) || !form.leq(b, j)) {
            c.fail(witness(form, a, b, j), "join is not an upper bound");
          }
          for (const auto z : d.fiber) {
            const bool lower = form.leq(z, a) && form.leq(z, b);
            const bool upper = form.leq(a, z) && form.leq(b, z);
            if (lower && !form.leq(z, m)) {
              c.fail(witness(form, a, b, z), "meet is not greatest");
            }
            if (upper && !form.leq(j, z)) {
              c.fail(witness(form, a, b, z), "join is not least");
            }
            if (form.leq(a, b) && form.leq(b, z) && !form.leq(a, z)) {
              c.fail(witness(form, a, b, z), "not transitive");
            }
          }
        }
        if (c.done()) break;
      }
      if (c.done()) break;
    }
    report.checks.push_back(c.finish());
  }

  {
    Check c("galois-connection", budget);
    for (const auto f : family.morphisms) {
      const auto dom = fiberLattice(form, f.domain).elements();
      const auto cod = fiberLattice(form, f.codomain).elements();
      if (!c.tick(dom.size() * cod.size())) break;
      for (const auto x : dom) {
        const auto fx = form.directImage(f, x);
        for (const auto y : cod) {
          if (form.leq(fx, y) != form.leq(x, form.inverseImage(f, y))) {
            c.fail(witness(form, f, x, y),
                   "direct image below y disagrees with x below inverse image");
            break;
          }
        }
        if (c.done()) break;
      }
      if (c.done()) break;
    }
    report.checks.push_back(c.finish());
  }

  {
    Check c("functoriality", budget);
    for (const auto& d : data) {
      const auto id = form.identity(d.object);
      if (!c.tick(d.n())) break;
      for (const auto x : d.fiber) {
        if (form.directImage(id, x) != x || form.inverseImage(id, x) != x) {
          c.fail(witness(form, id, x), "identity moves a subobject");
          break;
        }
      }
    }
    for (const auto f : family.morphisms) {
      if (c.done()) break;
      for (const auto g : family.morphisms) {
        if (g.domain != f.codomain) continue;
        const auto gf = form.compose(g, f);
        const auto dom = fiberLattice(form, f.domain).elements();
        const auto cod = fiberLattice(form, g.codomain).elements();
        if (!c.tick(dom.size() + cod.size())) break;
        for (const auto x : dom) {
          if (form.directImage(gf, x) !=
              form.directImage(g, form.directImage(f, x))) {
            c.fail(witness(form, g, f, x), "direct image of a composite");
            break;
          }
        }
        for (const auto z : cod) {
          if (c.done()) break;
          if (form.inverseImage(gf, z) !=
              form.inverseImage(f, form.inverseImage(g, z))) {
            c.fail(witness(form, g, f, z), "inverse image of a composite");
          }
        }
        if (c.done()) break;
      }
    }
    report.checks.push_back(c.finish());
  }

  {
    Check c("image-identities", budget);
    for (const auto f : family.morphisms) {
      const auto [ker, im] = kernelImage(form, f);
      const auto dom = fiberLattice(form, f.domain).elements();
      const auto cod = fiberLattice(form, f.codomain).elements();
      if (!c.tick(dom.size() + cod.size())) break;
      for (const auto x : dom) {
        if (form.inverseImage(f, form.directImage(f, x)) != form.join(x, ker)) {
          c.fail(witness(form, f, x),
                 "inverse image of the direct image is not x v Ker f");
          break;
        }
      }
      for (const auto y : cod) {
        if (c.done()) break;
        if (form.directImage(f, form.inverseImage(f, y)) != form.meet(y, im)) {
          c.fail(witness(form, f, y),
                 "direct image of the inverse image is not y ^ Im f");
        }
      }
      if (c.done()) break;
    }
    report.checks.push_back(c.finish());
  }

  {
    Check c("factorization", budget);
    for (const auto f : family.morphisms) {
      if (!c.tick()) break;
      const auto [ker, im] = kernelImage(form, f);
      FactorizationTriple t;
      try {
        t = form.factorize(f);
      } catch (const InstanceIntegrityError& e) {
        c.fail(witness(form, f), e.what());
        break;
      }
      if (t.projectionPart.domain != f.domain ||
          t.embeddingPart.codomain != f.codomain ||
          t.isoPart.domain != t.projectionPart.codomain ||
          t.embeddingPart.domain != t.isoPart.codomain) {
        c.fail(witness(form, f), "parts do not chain");
        break;
      }
      if (!isProjection(form, t.projectionPart) ||
          kernelImage(form, t.projectionPart).kernel != ker) {
        c.fail(witness(form, f, t.projectionPart),
               "first part is not a projection with kernel Ker f");
        break;
      }
      if (!isEmbedding(form, t.embeddingPart) ||
          kernelImage(form, t.embeddingPart).image != im) {
        c.fail(witness(form, f, t.embeddingPart),
               "last part is not an embedding with image Im f");
        break;
      }
      if (!isIsomorphism(form, t.isoPart)) {
        c.fail(witness(form, f, t.isoPart), "middle part is not an iso");
        break;
      }
      const auto recomposed =
          form.compose(t.embeddingPart, form.compose(t.isoPart, t.projectionPart));
      if (!sameImages(form, recomposed, f)) {
        c.fail(witness(form, f, recomposed), "parts do not recompose to f");
        break;
      }
    }
    report.checks.push_back(c.finish());
  }

  {
    Check c("normal-join-conormal-meet", budget);
    for (const auto& d : data) {
      if (!c.tick(d.n() * d.n())) break;
      for (std::size_t a = 0; a < d.n() && !c.done(); ++a) {
        for (std::size_t b = 0; b < d.n(); ++b) {
          const auto x = d.fiber[a];
          const auto y = d.fiber[b];
          if (d.normal[a] && d.normal[b] &&
              !form.normality(form.join(x, y)).isNormal) {
            c.fail(witness(form, x, y), "join of normal subobjects");
            break;
          }
          if (d.conormal[a] && d.conormal[b] &&
              !form.normality(form.meet(x, y)).isConormal) {
            c.fail(witness(form, x, y), "meet of conormal subobjects");
            break;
          }
        }
      }
      if (c.done()) break;
    }
    report.checks.push_back(c.finish());
  }

  {
    Check c("normality-witnesses", budget);
    for (const auto& d : data) {
      for (const auto x : d.fiber) {
        if (!c.tick()) break;
        const auto nm = form.normality(x);
        if (nm.isNormal != nm.projectionWitness.has_value() ||
            nm.isConormal != nm.embeddingWitness.has_value()) {
          c.fail(witness(form, x), "flag without witness or vice versa");
          break;
        }
        if (nm.projectionWitness) {
          const auto p = *nm.projectionWitness;
          if (p.domain != x.object || !isProjection(form, p) ||
              kernelImage(form, p).kernel != x) {
            c.fail(witness(form, x, p), "projection witness has the wrong kernel");
            break;
          }
        }
        if (nm.embeddingWitness) {
          const auto e = *nm.embeddingWitness;
          if (e.codomain != x.object || !isEmbedding(form, e) ||
              kernelImage(form, e).image != x) {
            c.fail(witness(form, x, e), "embedding witness has the wrong image");
            break;
          }
        }
      }
      if (c.done()) break;
    }
    report.checks.push_back(c.finish());
  }

  {
    Check c("oracle-agreement", budget);
    if (!oracle) {
      c.skip("no independent oracle for this instance");
    } else {
      for (const auto& d : data) {
        if (!c.tick(d.n() * d.n() + d.n())) break;
        for (std::size_t a = 0; a < d.n() && !c.done(); ++a) {
          const auto x = d.fiber[a];
          if (oracle->isNormal(x) != bool(d.normal[a]) ||
              oracle->isConormal(x) != bool(d.conormal[a])) {
            c.fail(witness(form, x), "normality flags disagree");
            break;
          }
          for (const auto y : d.fiber) {
            if (oracle->meet(x, y) != form.meet(x, y) ||
                oracle->join(x, y) != form.join(x, y)) {
              c.fail(witness(form, x, y), "meet or join disagrees");
              break;
            }
          }
        }
        if (c.done()) break;
      }
      for (const auto f : family.morphisms) {
        if (c.done()) break;
        const auto dom = fiberLattice(form, f.domain).elements();
        const auto cod = fiberLattice(form, f.codomain).elements();
        if (!c.tick(dom.size() + cod.size())) break;
        for (const auto x : dom) {
          if (oracle->directImage(f, x) != form.directImage(f, x)) {
            c.fail(witness(form, f, x), "direct image disagrees");
            break;
          }
        }
        for (const auto y : cod) {
          if (c.done()) break;
          if (oracle->inverseImage(f, y) != form.inverseImage(f, y)) {
            c.fail(witness(form, f, y), "inverse image disagrees");
          }
        }
      }
    }
    report.checks.push_back(c.finish());
  }

  for (const auto& c : report.checks) report.tuplesChecked += c.tuples;
  report.elapsedMs =
      std::chrono::duration<double, std::milli>(Clock::now() - started).count();
  return report;
}

ConformanceReport verifyTheorems(const Form& form, VerifyOptions options) {
  const auto started = Clock::now();
  Budget budget(options.budget);
  const auto family = buildMorphismFamily(form, options.maxFamily);
  ConformanceReport report;
  report.instance = form.label();
  report.morphismFamily = family.label;
  report.oracle = "not used";

  std::vector<ObjectData> data;
  for (const auto o : family.objects) {
    data.push_back(objectData(form, o, true));
  }

  {
    Check c("lattice-isomorphism", budget);
    for (const auto f : family.morphisms) {
      const auto [ker, im] = kernelImage(form, f);
      std::vector<SubobjectRef> upper, lower;
      for (const auto x : fiberLattice(form, f.domain).elements()) {
        if (form.leq(ker, x)) upper.push_back(x);
      }
      for (const auto y : fiberLattice(form, f.codomain).elements()) {
        if (form.leq(y, im)) lower.push_back(y);
      }
      if (!c.tick(upper.size() * upper.size() + lower.size())) break;
      for (const auto x : upper) {
        const auto fx = form.directImage(f, x);
        if (!form.leq(fx, im) || form.inverseImage(f, fx) != x) {
          c.fail(witness(form, f, x), "direct image is not inverted on [Ker f, 1]");
          break;
        }
        for (const auto x2 : upper) {
          if (form.directImage(f, form.meet(x, x2)) !=
                  form.meet(fx, form.directImage(f, x2)) ||
              form.directImage(f, form.join(x, x2)) !=
                  form.join(fx, form.directImage(f, x2))) {
            c.fail(witness(form, f, x, x2), "lattice operations not preserved");
            break;
          }
        }
        if (c.done()) break;
      }
      for (const auto y : lower) {
        if (c.done()) break;
        const auto fy = form.inverseImage(f, y);
        if (!form.leq(ker, fy) || form.directImage(f, fy) != y) {
          c.fail(witness(form, f, y), "inverse image is not inverted on [0, Im f]");
        }
      }
      if (c.done()) break;
    }
    report.checks.push_back(c.finish());
  }

  // (X v Y) ^ Z = X v (Y ^ Z) for X <= Z.
  auto modularAt = [&](SubobjectRef x, SubobjectRef y, SubobjectRef z) {
    return form.meet(form.join(x, y), z) == form.join(x, form.meet(y, z));
  };

  {
    Check c("restricted-modular-law", budget);
    for (const auto& d : data) {
      const auto n = d.n();
      if (!c.tick(n * n * n)) break;
      for (std::size_t x = 0; x < n && !c.done(); ++x) {
        for (std::size_t z = 0; z < n && !c.done(); ++z) {
          if (!form.leq(d.fiber[x], d.fiber[z])) continue;
          for (std::size_t y = 0; y < n; ++y) {
            const bool first = d.normal[y] && d.conormal[z];
            const bool second = d.conormal[y] && d.normal[x];
            if ((first || second) &&
                !modularAt(d.fiber[x], d.fiber[y], d.fiber[z])) {
              c.fail(witness(form, d.fiber[x], d.fiber[y], d.fiber[z]),
                     first ? "Y normal, Z conormal" : "Y conormal, X normal");
              break;
            }
          }
        }
      }
      if (c.done()) break;
    }
    report.checks.push_back(c.finish());
  }

  {
    Check c("less-restricted-modular-law", budget);
    for (const auto& d : data) {
      const auto n = d.n();
      if (!c.tick(n * n * n * n)) break;
      const auto leq = [&](std::size_t a, std::size_t b) {
        return form.leq(d.fiber[a], d.fiber[b]);
      };
      for (std::size_t s = 0; s < n && !c.done(); ++s) {
        for (std::size_t x = 0; x < n && !c.done(); ++x) {
          for (std::size_t z = 0; z < n && !c.done(); ++z) {
            if (!leq(x, z) || !leq(z, s)) continue;
            for (std::size_t y = 0; y < n; ++y) {
              const bool first = d.rel(y, s) && d.conormal[z];
              const bool second = d.conormal[y] && leq(y, s) && d.rel(x, s);
              if ((first || second) &&
                  !modularAt(d.fiber[x], d.fiber[y], d.fiber[z])) {
                c.fail(witness(form, d.fiber[x], d.fiber[y], d.fiber[z],
                               d.fiber[s]),
                       first ? "Y normal to S, Z conormal inside S"
                             : "Y conormal inside S, X normal to S");
                break;
              }
            }
          }
        }
      }
      if (c.done()) break;
    }
    report.checks.push_back(c.finish());
  }

  {
    Check c("frobenius-reciprocity", budget);
    for (const auto f : family.morphisms) {
      const auto dom = fiberLattice(form, f.domain).elements();
      const auto cod = fiberLattice(form, f.codomain).elements();
      if (!c.tick(dom.size() * cod.size())) break;
      for (const auto x : dom) {
        if (!form.normality(x).isConormal) continue;
        const auto fx = form.directImage(f, x);
        for (const auto y : cod) {
          if (form.directImage(f, form.meet(form.inverseImage(f, y), x)) !=
              form.meet(y, fx)) {
            c.fail(witness(form, f, x, y), "X conormal");
            break;
          }
        }
        if (c.done()) break;
      }
      if (c.done()) break;
    }
    report.checks.push_back(c.finish());
  }

  {
    Check c("dual-frobenius-reciprocity", budget);
    for (const auto f : family.morphisms) {
      const auto dom = fiberLattice(form, f.domain).elements();
      const auto cod = fiberLattice(form, f.codomain).elements();
      if (!c.tick(dom.size() * cod.size())) break;
      for (const auto y : cod) {
        if (!form.normality(y).isNormal) continue;
        const auto fy = form.inverseImage(f, y);
        for (const auto x : dom) {
          if (form.inverseImage(f, form.join(form.directImage(f, x), y)) !=
              form.join(x, fy)) {
            c.fail(witness(form, f, x, y), "Y normal");
            break;
          }
        }
        if (c.done()) break;
      }
      if (c.done()) break;
    }
    report.checks.push_back(c.finish());
  }

  {
    Check c("meet-normality", budget);
    for (const auto& d : data) {
      const auto n = d.n();
      if (!c.tick(n * n * n)) break;
      for (std::size_t w = 0; w < n && !c.done(); ++w) {
        for (std::size_t x = 0; x < n && !c.done(); ++x) {
          if (!d.rel(w, x)) continue;
          for (std::size_t y = 0; y < n; ++y) {
            if (!d.conormal[y]) continue;
            const auto wy = form.meet(d.fiber[w], d.fiber[y]);
            const auto xy = form.meet(d.fiber[x], d.fiber[y]);
            if (!d.rel(wy.id, xy.id)) {
              c.fail(witness(form, d.fiber[w], d.fiber[x], d.fiber[y]),
                     "W normal to X, Y conormal, but W^Y not normal to X^Y");
              break;
            }
          }
        }
      }
      if (c.done()) break;
    }
    report.checks.push_back(c.finish());
  }

  {
    Check c("join-normality", budget);
    for (const auto& d : data) {
      const auto n = d.n();
      if (!c.tick(n * n * n)) break;
      for (std::size_t w = 0; w < n && !c.done(); ++w) {
        for (std::size_t x = 0; x < n && !c.done(); ++x) {
          if (!d.rel(w, x)) continue;
          for (std::size_t y = 0; y < n; ++y) {
            const auto xy = form.join(d.fiber[x], d.fiber[y]);
            if (!d.rel(y, xy.id)) continue;
            const auto wy = form.join(d.fiber[w], d.fiber[y]);
            if (!d.rel(wy.id, xy.id)) {
              c.fail(witness(form, d.fiber[w], d.fiber[x], d.fiber[y]),
                     "W normal to X, Y normal to XvY, but WvY not normal to XvY");
              break;
            }
          }
        }
      }
      if (c.done()) break;
    }
    report.checks.push_back(c.finish());
  }

  {
    Check c("canonical-zigzag", budget);
    for (const auto& d : data) {
      const auto n = d.n();
      for (std::size_t a = 0; a < n && !c.done(); ++a) {
        for (std::size_t b = 0; b < n && !c.done(); ++b) {
          if (!d.rel(a, b)) continue;
          const Interval sf{d.fiber[a], d.fiber[b]};
          const auto z = canonicalZigzag(form, sf);
          const auto quotient = fiberLattice(form, z.end()).elements();
          if (!c.tick(n + quotient.size())) break;
          for (const auto x : d.fiber) {
            const auto there = chase(form, z, x);
            const auto back = chase(form, z, there, ChaseDirection::kBackward);
            if (back != form.join(form.meet(x, sf.hi), sf.lo)) {
              c.fail(witness(form, sf.lo, sf.hi, x),
                     "forward then backward chase is not (Z^Y)vX");
              break;
            }
          }
          for (const auto q : quotient) {
            if (c.done()) break;
            const auto back = chase(form, z, q, ChaseDirection::kBackward);
            if (!form.leq(sf.lo, back) || !form.leq(back, sf.hi) ||
                chase(form, z, back) != q) {
              c.fail(witness(form, sf.lo, sf.hi, q),
                     "backward chase is not a lattice isomorphism onto [X, Y]");
            }
          }
          const Interval whole{form.bottom(z.end()), form.top(z.end())};
          if (!c.done() &&
              chase(form, z, whole, ChaseDirection::kBackward) != sf) {
            c.fail(witness(form, sf.lo, sf.hi),
                   "[0, 1] does not chase back to the subfactor");
          }
        }
      }
      if (c.done()) break;
    }
    report.checks.push_back(c.finish());
  }

  {
    Check c("unrestricted-modular-law", budget);
    for (const auto& d : data) {
      const auto n = d.n();
      if (!c.tick(n * n * n)) break;
      for (std::size_t x = 0; x < n && !c.done(); ++x) {
        for (std::size_t z = 0; z < n && !c.done(); ++z) {
          if (!form.leq(d.fiber[x], d.fiber[z])) continue;
          for (std::size_t y = 0; y < n; ++y) {
            if (!modularAt(d.fiber[x], d.fiber[y], d.fiber[z])) {
              c.fail(witness(form, d.fiber[x], d.fiber[y], d.fiber[z]),
                     "X <= Z but (X v Y) ^ Z != X v (Y ^ Z)");
              break;
            }
          }
        }
      }
      if (c.done()) break;
    }
    report.observations.push_back(c.finish());
  }

  for (const auto* list : {&report.checks, &report.observations}) {
    for (const auto& c : *list) report.tuplesChecked += c.tuples;
  }
  report.elapsedMs =
      std::chrono::duration<double, std::milli>(Clock::now() - started).count();
  return report;
}

}  // namespace noether
