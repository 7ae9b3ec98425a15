#include "girthlab/amalgam.hpp"

#include <algorithm>

#include "girthlab/errors.hpp"

namespace girthlab {

AmalgamElement AmalgamElement::factor(AmalgamSide side, Word g) {
  AmalgamElement e;
  e.syllables.push_back({side, std::move(g)});
  return e;
}

AmalgamPresentation::AmalgamPresentation(GroupOracle left, GroupOracle right,
                                         std::vector<Word> c_left_gens,
                                         std::vector<Word> c_right_gens,
                                         std::vector<Word> iso_images)
    : left_(std::move(left)),
      right_(std::move(right)),
      iso_images_(std::move(iso_images)) {
  c_left_ = make_subgroup(left_, std::move(c_left_gens));
  c_right_ = make_subgroup(right_, std::move(c_right_gens));
  iso_image_ = make_subgroup(right_, iso_images_);
  validate();
}

void AmalgamPresentation::validate() {
  const auto& dom = c_left_->declared_gens();
  if (iso_images_.size() != dom.size())
    fail(ErrorCode::ValidationError,
         "the identification must give exactly one image per C generator");
  for (const Word& img : iso_images_)
    if (!c_right_->member(img))
      fail(ErrorCode::ValidationError,
           "an identification image lies outside the right copy of C");
  // equality of the image subgroup with the declared right copy makes the
  // identification invertible for transport in both directions
  for (const Word& cg : c_right_->declared_gens())
    if (!iso_image_->member(cg))
      fail(ErrorCode::ValidationError,
           "the identification is not onto the right copy of C");

  if (left_.kind() == GroupKind::FiniteCayley &&
      right_.kind() == GroupKind::FiniteCayley) {
    // walk C's closure on the left, propagating right images; a conflict
    // means the identification is not well defined on C
    const CayleyTable& tl = left_.table();
    const CayleyTable& tr = right_.table();
    std::vector<int> img_of(static_cast<size_t>(tl.order()), -1);
    std::vector<int> members{0};
    img_of[0] = 0;
    std::vector<int> dom_elems, img_elems;
    for (const Word& g : dom) dom_elems.push_back(left_.eval_element(g));
    for (const Word& g : iso_images_)
      img_elems.push_back(right_.eval_element(g));
    for (size_t qi = 0; qi < members.size(); ++qi) {
      int cur = members[qi];
      for (size_t i = 0; i < dom_elems.size(); ++i)
        for (int sign : {+1, -1}) {
          int gd = sign > 0 ? dom_elems[i] : tl.inv(dom_elems[i]);
          int gi = sign > 0 ? img_elems[i] : tr.inv(img_elems[i]);
          int nxt = tl.mul(cur, gd);
          int nxt_img = tr.mul(img_of[static_cast<size_t>(cur)], gi);
          if (img_of[static_cast<size_t>(nxt)] < 0) {
            img_of[static_cast<size_t>(nxt)] = nxt_img;
            members.push_back(nxt);
          } else if (img_of[static_cast<size_t>(nxt)] != nxt_img) {
            fail(ErrorCode::ValidationError,
                 "the identification does not respect a relation of C");
          }
        }
    }
    std::vector<int> image_set;
    for (int m : members) image_set.push_back(img_of[static_cast<size_t>(m)]);
    std::sort(image_set.begin(), image_set.end());
    image_set.erase(std::unique(image_set.begin(), image_set.end()),
                    image_set.end());
    if (image_set.size() != members.size())
      fail(ErrorCode::ValidationError,
           "the identification is not injective on C");
  } else if (!dom.empty()) {
    // bounded check: short relations must agree on both sides
    ReducedWordEnumerator en(static_cast<int>(dom.size()), 6);
    while (auto w = en.next()) {
      bool l = left_.is_identity(substitute(*w, dom));
      bool r = right_.is_identity(substitute(*w, iso_images_));
      if (l != r)
        fail(ErrorCode::ValidationError,
             l ? "the identification does not respect a relation of C"
               : "the identification is not injective on a short word");
    }
  }
}

bool AmalgamPresentation::is_proper() const {
  return c_left_->is_proper() && c_right_->is_proper();
}

bool AmalgamPresentation::in_core(AmalgamSide side, const Word& g) const {
  return side == AmalgamSide::Left ? c_left_->member(g) : c_right_->member(g);
}

Word AmalgamPresentation::transport(AmalgamSide from, const Word& g) const {
  if (from == AmalgamSide::Left)
    return right_.canonical_word(
        substitute(c_left_->express(g), iso_images_));
  return left_.canonical_word(
      substitute(iso_image_->express(g), c_left_->declared_gens()));
}

AmalgamElement AmalgamPresentation::normalize(const AmalgamElement& e) const {
  std::vector<AmalgamSyllable> stack;
  std::vector<AmalgamSyllable> pending(e.syllables.rbegin(),
                                       e.syllables.rend());
  while (!pending.empty()) {
    AmalgamSide side = pending.back().side;
    Word g = factor(side).canonical_word(pending.back().g);
    pending.pop_back();
    if (factor(side).is_identity(g)) continue;
    if (!stack.empty() && stack.back().side == side) {
      pending.push_back({side, stack.back().g * g});
      stack.pop_back();
      continue;
    }
    if (!stack.empty() && in_core(side, g)) {
      // fold the C element into the previous syllable across the iso
      AmalgamSyllable top = std::move(stack.back());
      stack.pop_back();
      pending.push_back({top.side, top.g * transport(side, g)});
      continue;
    }
    if (!stack.empty() && in_core(stack.back().side, stack.back().g)) {
      AmalgamSyllable top = std::move(stack.back());
      stack.pop_back();
      pending.push_back({side, transport(top.side, top.g) * g});
      continue;
    }
    stack.push_back({side, std::move(g)});
  }
  return AmalgamElement{std::move(stack)};
}

AmalgamElement AmalgamPresentation::mul(const AmalgamElement& a,
                                        const AmalgamElement& b) const {
  AmalgamElement joined = a;
  joined.syllables.insert(joined.syllables.end(), b.syllables.begin(),
                          b.syllables.end());
  return normalize(joined);
}

AmalgamElement AmalgamPresentation::inverse(const AmalgamElement& e) const {
  AmalgamElement out;
  for (auto it = e.syllables.rbegin(); it != e.syllables.rend(); ++it)
    out.syllables.push_back({it->side, it->g.inverse()});
  return normalize(out);
}

bool AmalgamPresentation::is_identity(const AmalgamElement& e) const {
  AmalgamElement n = normalize(e);
  if (n.syllables.empty()) return true;
  if (n.syllables.size() == 1)
    return factor(n.syllables[0].side).is_identity(n.syllables[0].g);
  // alternating form with every syllable outside C: nontrivial
  return false;
}

std::string AmalgamPresentation::format(const AmalgamElement& e) const {
  if (e.syllables.empty()) return "1";
  std::string out;
  for (const AmalgamSyllable& s : e.syllables) {
    if (!out.empty()) out += " ";
    out += factor(s.side).alphabet().format(s.g);
  }
  return out;
}

bool check_squares_force_normality(const GroupOracle& g, const Subgroup& h) {
  if (g.kind() != GroupKind::FiniteCayley)
    fail(ErrorCode::Unsupported, "the squares check needs a finite group");
  const CayleyTable& t = g.table();
  int n = t.order();
  std::vector<char> in_h(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i)
    in_h[static_cast<size_t>(i)] = h.member(g.element_word(i));
  for (int x = 0; x < n; ++x)
    if (!in_h[static_cast<size_t>(x)] &&
        !in_h[static_cast<size_t>(t.mul(x, x))])
      return true;  // hypothesis fails, implication vacuous
  for (int a = 0; a < n; ++a)
    for (int x = 0; x < n; ++x)
      if (in_h[static_cast<size_t>(x)] &&
          !in_h[static_cast<size_t>(t.mul(t.mul(a, x), t.inv(a)))])
        return false;
  return true;
}

std::optional<std::string> separated_pair_violation(const GroupOracle& a,
                                                    const Subgroup& c,
                                                    const Word& a1,
                                                    const Word& a2) {
  if (a.equal(a1, a2)) return "a1 and a2 are equal";
  struct Probe {
    Word w;
    const char* what;
  };
  const Probe probes[] = {
      {a1, "a1 lies in C"},
      {a2, "a2 lies in C"},
      {a1.inverse() * a2, "a1^-1 a2 lies in C"},
      {a2 * a1.inverse(), "a2 a1^-1 lies in C"},
      {a1.inverse() * a2 * a1, "a1^-1 a2 a1 lies in C"},
      {a1 * a2 * a1.inverse(), "a1 a2 a1^-1 lies in C"},
      {a2.inverse() * a1 * a2, "a2^-1 a1 a2 lies in C"},
      {a2 * a1 * a2.inverse(), "a2 a1 a2^-1 lies in C"},
  };
  for (const Probe& p : probes)
    if (c.member(p.w)) return std::string(p.what);
  return std::nullopt;
}

std::pair<Word, Word> find_separated_pair(const GroupOracle& a,
                                          const Subgroup& c) {
  if (auto idx = c.index(); idx && *idx < 3)
    fail(ErrorCode::NoPairFound,
         "C has index below three; no separated pair exists");
  for (int len : {4, 8, 12}) {
    std::vector<Word> elems = a.enumerate_elements(len);
    for (const Word& x : elems) {
      if (c.member(x)) continue;
      Word sq = a.canonical_word(x * x);
      if (c.member(sq)) continue;
      if (!separated_pair_violation(a, c, x, sq)) return {x, sq};
    }
    // squares all landed in C, so C is normal and any two elements of
    // distinct nontrivial cosets work; scan pairs to be safe
    for (const Word& x : elems)
      for (const Word& y : elems)
        if (!separated_pair_violation(a, c, x, y)) return {x, y};
    if (a.order()) break;  // finite groups are fully enumerated already
  }
  fail(ErrorCode::NoPairFound, "no separated pair found; C must have index below three");
}

ConjugatorScheme amalgam_conjugator_words(int count, long long r) {
  if (r < 1)
    fail(ErrorCode::PreconditionViolated, "r must be at least 1");
  if (count < 1)
    fail(ErrorCode::PreconditionViolated,
         "need at least one conjugated generator");
  int width = 1;
  while ((1 << width) < count) ++width;
  Alphabet formal({"X", "Y", "Z"});
  const Word xi = formal.parse("X Y");
  const Word eta = formal.parse("Z Y");
  for (int p = std::max<long long>(2 * r + 1, width + 3);; ++p) {
    ConjugatorScheme s;
    s.p = p;
    s.formal = formal;
    int pad = p - width - 3;
    for (int k = 0; k < count; ++k) {
      // slot layout: family mark, index bits, filler, family mark, final
      // xi; the repeated mark keeps cancellation in pre * post to one slot
      auto pattern = [&](bool is_pre) {
        Word w = is_pre ? xi : eta;
        for (int b = width - 1; b >= 0; --b)
          w = w * (((k >> b) & 1) ? eta : xi);
        for (int j = 0; j < pad; ++j) w = w * (j % 2 ? eta : xi);
        w = w * (is_pre ? xi : eta) * xi;
        return w;
      };
      s.pre.push_back(pattern(true));
      s.post.push_back(pattern(false).inverse());
    }
    bool ok = true;
    for (const Word& u : s.pre)
      ok = ok && static_cast<int>(u.size()) == 2 * p &&
           u.letters().back() == Letter{1, +1};
    for (const Word& v : s.post)
      ok = ok && static_cast<int>(v.size()) == 2 * p &&
           v.letters().front() == Letter{1, -1};
    for (const Word& u : s.pre)
      for (const Word& v : s.post)
        for (int e : {+1, -1})
          for (int d : {+1, -1}) {
            Word prod =
                (e > 0 ? u : u.inverse()) * (d > 0 ? v : v.inverse());
            if (2 * static_cast<long long>(prod.size()) <= 3 * p) ok = false;
          }
    if (ok) return s;
    if (p > 2 * r + width + 20)
      fail(ErrorCode::Internal, "conjugator scheme failed to stabilize");
  }
}

std::vector<AmalgamElement> build_amalgam_witness(const AmalgamPresentation& p,
                                                  const std::vector<Word>& s1,
                                                  const std::vector<Word>& s2,
                                                  long long r) {
  if (r < 1)
    fail(ErrorCode::PreconditionViolated, "r must be at least 1");
  if (s1.size() < 2)
    fail(ErrorCode::PreconditionViolated,
         "the left generating set needs at least two elements");
  if (s2.empty())
    fail(ErrorCode::PreconditionViolated, "the right generating set is empty");
  for (size_t i = 0; i < s1.size(); ++i)
    if (p.in_core(AmalgamSide::Left, s1[i]))
      fail(ErrorCode::PreconditionViolated,
           "left generator " + std::to_string(i + 1) + " lies in C");
  for (size_t j = 0; j < s2.size(); ++j)
    if (p.in_core(AmalgamSide::Right, s2[j]))
      fail(ErrorCode::PreconditionViolated,
           "right generator " + std::to_string(j + 1) + " lies in C");
  if (auto why = separated_pair_violation(p.left(), p.core_left(), s1[0], s1[1]))
    fail(ErrorCode::PreconditionViolated, *why);

  const Word& a1 = s1[0];
  const Word& a2 = s1[1];
  const Word& b1 = s2[0];
  auto L = [](Word g) {
    return AmalgamElement::factor(AmalgamSide::Left, std::move(g));
  };
  auto R = [](Word g) {
    return AmalgamElement::factor(AmalgamSide::Right, std::move(g));
  };
  AmalgamElement u = p.mul(p.mul(L(a1), R(b1)), L(a1.inverse()));
  AmalgamElement v = p.mul(p.mul(L(a2), R(b1)), L(a2.inverse()));
  AmalgamElement w = p.mul(p.mul(L(a1 * a2), R(b1)), L((a1 * a2).inverse()));
  const AmalgamElement seed[] = {u, v, w};  // X, Y, Z

  int count = static_cast<int>(s1.size() + s2.size());
  ConjugatorScheme scheme = amalgam_conjugator_words(count, r);
  auto realize = [&](const Word& formal) {
    AmalgamElement out;
    for (const Letter& l : formal.letters()) {
      const AmalgamElement& x = seed[static_cast<size_t>(l.sym)];
      out = p.mul(out, l.sign > 0 ? x : p.inverse(x));
    }
    return out;
  };

  std::vector<AmalgamElement> result;
  for (size_t i = 0; i < s1.size(); ++i)
    result.push_back(p.mul(p.mul(realize(scheme.pre[i]), L(s1[i])),
                           realize(scheme.post[i])));
  for (size_t j = 0; j < s2.size(); ++j) {
    AmalgamElement mid = p.mul(p.mul(L(a1), R(s2[j])), L(a1));
    size_t k = s1.size() + j;
    result.push_back(
        p.mul(p.mul(realize(scheme.pre[k]), mid), realize(scheme.post[k])));
  }
  result.push_back(p.mul(u, v));
  result.push_back(p.mul(w, v));
  return result;
}

}  // namespace girthlab
