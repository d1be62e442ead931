#include "lantern/classifier.hpp"

#include <algorithm>
#include <array>

#include "lantern/arc_engine.hpp"

namespace lantern {

namespace {

constexpr std::array<const char*, 10> kRuleNames = {"H1",  "H2",  "H3",  "H4", "OT1",
                                                    "OT2", "OT3", "OT4", "R1", "R2"};
constexpr std::array<const char*, 4> kVerdictNames = {"HolomorphicallyFillable", "Overtwisted",
                                                      "RightVeering", "Unknown"};

Integer min_r(const std::array<Integer, 4>& r) { return std::min({r[0], r[1], r[2], r[3]}); }

bool is_rv_rule(RuleTag t) { return t == RuleTag::R1 || t == RuleTag::R2; }

void add(std::vector<RuleTag>& tags, RuleTag t) {
  if (std::find(tags.begin(), tags.end(), t) == tags.end()) tags.push_back(t);
}

Verdict verdict_of(const std::vector<RuleTag>& tags) {
  auto any = [&](auto pred) { return std::any_of(tags.begin(), tags.end(), pred); };
  if (any(is_overtwisted_rule)) return Verdict::Overtwisted;
  if (any(is_fillable_rule)) return Verdict::HolomorphicallyFillable;
  if (any(is_rv_rule)) return Verdict::RightVeering;
  return Verdict::Unknown;
}

bool supports(Verdict v, RuleTag t) {
  switch (v) {
    case Verdict::Overtwisted: return is_overtwisted_rule(t);
    case Verdict::HolomorphicallyFillable: return is_fillable_rule(t);
    case Verdict::RightVeering: return is_rv_rule(t);
    case Verdict::Unknown: return false;
  }
  return false;
}

// Rule conditions on a^r1 b^r2 c^r3 d^r4 e^m f^n.
void shape_rules(const std::array<Integer, 4>& r, const Integer& m, const Integer& n,
                 std::vector<RuleTag>& tags) {
  const Integer lo = min_r(r);
  const bool some_negative = lo < 0;
  const bool some_zero = std::any_of(r.begin(), r.end(), [](const Integer& x) { return x == 0; });
  const Integer mn = m * n;
  const bool mixed_negative = std::min(m, n) < 0;

  if (some_negative) add(tags, RuleTag::OT1);
  if (some_zero && mixed_negative) add(tags, RuleTag::OT2);
  if (lo == 1 && (r[1] == 1 || r[3] == 1) && mixed_negative && mn >= 2) add(tags, RuleTag::OT3);
  if (lo == 1 && (r[0] == 1 || r[2] == 1) && mixed_negative && mn >= 2) add(tags, RuleTag::OT4);
  // The stated condition (mn = 0, max = 0) is only proved for m < 0, n = 0.
  if (lo == 1 && m < 0 && n == 0) add(tags, RuleTag::R1);
  if (lo == 1 && mn < 0) add(tags, RuleTag::R2);
}

}  // namespace

std::string to_string(RuleTag t) { return kRuleNames[static_cast<std::size_t>(t)]; }
std::string to_string(Verdict v) { return kVerdictNames[static_cast<std::size_t>(v)]; }

std::optional<RuleTag> rule_from_string(const std::string& s) {
  for (std::size_t i = 0; i < kRuleNames.size(); ++i) {
    if (s == kRuleNames[i]) return static_cast<RuleTag>(i);
  }
  return std::nullopt;
}

std::optional<Verdict> verdict_from_string(const std::string& s) {
  for (std::size_t i = 0; i < kVerdictNames.size(); ++i) {
    if (s == kVerdictNames[i]) return static_cast<Verdict>(i);
  }
  return std::nullopt;
}

bool is_fillable_rule(RuleTag t) { return t <= RuleTag::H4; }
bool is_overtwisted_rule(RuleTag t) { return t >= RuleTag::OT1 && t <= RuleTag::OT4; }

std::optional<OTShape> match_ot_shape(const ReducedForm& rf) {
  const auto& b = rf.blocks;
  OTShape shape;
  shape.r = rf.r;
  if (b.empty()) {
    shape.m = 0;
    shape.n = 0;
    return shape;
  }
  if (b.size() == 1) {
    shape.m = b[0].m;
    shape.n = b[0].n;
    return shape;
  }
  if (b.size() != 2) return std::nullopt;
  if (b[1].n == 0) {
    // e^m1 f^n e^m2
    shape.m = b[0].m + b[1].m;
    shape.n = b[0].n;
    return shape;
  }
  if (b[0].m == 0) {
    // f^n1 e^m f^n2
    shape.pattern = OTPattern::F_E_F;
    shape.m = b[1].m;
    shape.n = b[0].n + b[1].n;
    return shape;
  }
  return std::nullopt;
}

std::vector<RuleTag> fillable_rules(const ReducedForm& rf) {
  std::vector<RuleTag> tags;
  const Integer lo = min_r(rf.r);
  if (rf.blocks.size() <= 1) {
    const Integer m = rf.blocks.empty() ? Integer(0) : rf.blocks[0].m;
    const Integer n = rf.blocks.empty() ? Integer(0) : rf.blocks[0].n;
    const Integer hi = std::max(m, n);
    if (hi >= 0 && lo >= std::max({Integer(-m), Integer(-n), Integer(0)})) tags.push_back(RuleTag::H1);
    if (m < 0 && n < 0 && hi == -1 && lo >= -m - n - 1) tags.push_back(RuleTag::H2);
    if (m < 0 && n < 0 && hi < -1 && lo >= -m - n - 2) tags.push_back(RuleTag::H3);
  } else {
    Integer needed = 0;
    for (const Block& b : rf.blocks) {
      if (b.m < 0) needed -= b.m;
      if (b.n < 0) needed -= b.n;
    }
    if (lo >= needed) tags.push_back(RuleTag::H4);
  }
  return tags;
}

Classification classify_rules(const ReducedForm& rf, RuleOptions options) {
  Classification c;
  c.rules = fillable_rules(rf);
  if (auto shape = match_ot_shape(rf)) {
    if (shape->pattern == OTPattern::E_F_E) {
      shape_rules(shape->r, shape->m, shape->n, c.rules);
    } else {
      const ReducedForm turned = mirror_ef(rf);
      const auto mirrored = match_ot_shape(turned);
      shape_rules(mirrored->r, mirrored->m, mirrored->n, c.rules);
    }
  } else if (options.ot1_broad && min_r(rf.r) < 0) {
    add(c.rules, RuleTag::OT1);
  }
  std::sort(c.rules.begin(), c.rules.end());
  c.verdict = verdict_of(c.rules);
  return c;
}

ReducedForm mirror_ef(const ReducedForm& rf) {
  return pack(mirror_ef(expand(rf)));
}

Word mirror_ef(const Word& w) {
  static constexpr std::array<Generator, 8> image = {Generator::b, Generator::c, Generator::d,
                                                     Generator::a, Generator::f, Generator::e,
                                                     Generator::h, Generator::g};
  std::vector<Term> terms;
  for (const Term& t : w.terms()) terms.push_back({image[index_of(t.generator)], t.exponent});
  return free_reduce(terms);
}

Classification classify(const ReducedForm& rf, RuleOptions options) {
  struct Hit {
    std::size_t rotation;
    bool mirror;
    std::vector<RuleTag> rules;
  };
  std::vector<Hit> hits;
  std::vector<RuleTag> all;
  const std::vector<ReducedForm> forms = cyclic_rotations(rf);
  for (std::size_t k = 0; k < forms.size(); ++k) {
    for (bool mirror : {false, true}) {
      const ReducedForm form = mirror ? mirror_ef(forms[k]) : forms[k];
      Classification c = classify_rules(form, options);
      for (RuleTag t : c.rules) add(all, t);
      hits.push_back({k, mirror, std::move(c.rules)});
    }
  }
  std::sort(all.begin(), all.end());
  const bool fillable = std::any_of(all.begin(), all.end(), is_fillable_rule);
  const bool overtwisted = std::any_of(all.begin(), all.end(), is_overtwisted_rule);
  if (fillable && overtwisted) {
    std::string tags;
    for (RuleTag t : all) tags += " " + to_string(t);
    throw InvariantViolation("fillable and overtwisted rules on one conjugacy class:" + tags);
  }
  Classification result;
  result.rules = std::move(all);
  result.verdict = verdict_of(result.rules);
  for (const Hit& h : hits) {
    if (std::any_of(h.rules.begin(), h.rules.end(),
                    [&](RuleTag t) { return supports(result.verdict, t); })) {
      result.rotation = h.rotation;
      result.mirror = h.mirror;
      break;
    }
  }
  return result;
}

}  // namespace lantern
