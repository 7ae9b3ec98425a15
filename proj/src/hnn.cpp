#include "girthlab/hnn.hpp"

#include <algorithm>
#include <cstdlib>

#include "girthlab/errors.hpp"
#include "girthlab/stallings.hpp"

namespace girthlab {

HnnExtension::HnnExtension(GroupOracle base, std::vector<Word> a_gens,
                           std::vector<Word> b_gens,
                           std::vector<Word> phi_images,
                           std::string stable_name)
    : base_(std::move(base)), phi_images_(std::move(phi_images)) {
  A_ = make_subgroup(base_, std::move(a_gens));
  B_ = make_subgroup(base_, std::move(b_gens));
  phi_image_ = make_subgroup(base_, phi_images_);
  std::vector<std::string> names = base_.alphabet().names();
  if (std::find(names.begin(), names.end(), stable_name) != names.end())
    fail(ErrorCode::ValidationError,
         "stable letter collides with a base generator name");
  names.push_back(stable_name);
  ext_alphabet_ = Alphabet(std::move(names));
  validate();
}

void HnnExtension::validate() {
  const auto& a_gens = A_->declared_gens();
  if (phi_images_.size() != a_gens.size())
    fail(ErrorCode::ValidationError,
         "phi must give exactly one image per A generator");
  for (const Word& img : phi_images_)
    if (!B_->member(img))
      fail(ErrorCode::ValidationError, "phi image lies outside B");
  // phi must be onto B, or t g t^-1 pinches with g in B could not be
  // rewritten; together with image membership this pins phi(A) = B
  for (const Word& bg : B_->declared_gens())
    if (!phi_image_->member(bg))
      fail(ErrorCode::ValidationError, "phi is not onto B");

  switch (base_.kind()) {
    case GroupKind::Free: {
      auto a_aut = StallingsAutomaton::build(base_.rank(), a_gens);
      if (a_aut.rank() != static_cast<int>(a_gens.size()))
        fail(ErrorCode::NonBasis,
             "A's generators must be a free basis to define phi");
      auto img_aut = StallingsAutomaton::build(base_.rank(), phi_images_);
      if (img_aut.rank() != static_cast<int>(a_gens.size()))
        fail(ErrorCode::ValidationError,
             "phi images are not independent; the map is not injective");
      break;
    }
    case GroupKind::FreeAbelian: {
      std::vector<std::vector<long long>> acols, icols;
      for (const Word& g : a_gens) acols.push_back(base_.abelian_eval(g));
      for (const Word& g : phi_images_) icols.push_back(base_.abelian_eval(g));
      if (lattice_rank(acols) != a_gens.size())
        fail(ErrorCode::NonBasis,
             "A's generators must be independent to define phi");
      if (lattice_rank(icols) != a_gens.size())
        fail(ErrorCode::ValidationError,
             "phi images are not independent; the map is not injective");
      break;
    }
    case GroupKind::Dihedral: {
      // bounded check: relations among A's generators up to length 6 must
      // hold among the images and conversely
      ReducedWordEnumerator en(static_cast<int>(a_gens.size()), 6);
      while (auto w = en.next()) {
        bool dom = base_.is_identity(substitute(*w, a_gens));
        bool img = base_.is_identity(substitute(*w, phi_images_));
        if (dom != img)
          fail(ErrorCode::ValidationError,
               dom ? "phi does not respect a relation of A"
                   : "phi is not injective on a short word");
      }
      break;
    }
    case GroupKind::FiniteCayley: {
      // walk A's closure, propagating images; a conflict means phi is not
      // well defined, and a non-bijective image map is not injective
      const CayleyTable& t = base_.table();
      std::vector<int> img_of(static_cast<size_t>(t.order()), -1);
      std::vector<int> members{0};
      img_of[0] = 0;
      std::vector<int> agen_elems, igen_elems;
      for (const Word& g : a_gens) agen_elems.push_back(base_.eval_element(g));
      for (const Word& g : phi_images_)
        igen_elems.push_back(base_.eval_element(g));
      for (size_t qi = 0; qi < members.size(); ++qi) {
        int cur = members[qi];
        for (size_t i = 0; i < agen_elems.size(); ++i) {
          for (int sign : {+1, -1}) {
            int ga = sign > 0 ? agen_elems[i] : t.inv(agen_elems[i]);
            int gi = sign > 0 ? igen_elems[i] : t.inv(igen_elems[i]);
            int nxt = t.mul(cur, ga);
            int nxt_img = t.mul(img_of[static_cast<size_t>(cur)], gi);
            if (img_of[static_cast<size_t>(nxt)] < 0) {
              img_of[static_cast<size_t>(nxt)] = nxt_img;
              members.push_back(nxt);
            } else if (img_of[static_cast<size_t>(nxt)] != nxt_img) {
              fail(ErrorCode::ValidationError,
                   "phi does not respect a relation of A");
            }
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
             "phi is not injective on A's closure");
      break;
    }
  }
}

HnnClass HnnExtension::classify() const {
  bool a_whole = !A_->is_proper();
  bool b_whole = !B_->is_proper();
  if (a_whole && b_whole) return HnnClass::Full;
  if (a_whole || b_whole) return HnnClass::SemiProper;
  return HnnClass::Proper;
}

Word HnnExtension::apply_phi(const Word& g) const {
  return base_.canonical_word(substitute(A_->express(g), phi_images_));
}

Word HnnExtension::apply_phi_inverse(const Word& g) const {
  return base_.canonical_word(
      substitute(phi_image_->express(g), A_->declared_gens()));
}

HnnElement HnnExtension::to_element(const Word& w) const {
  HnnElement e;
  Word seg;
  auto flush = [&](Word* dest) { *dest = base_.canonical_word(seg); seg = Word(); };
  for (const Letter& l : w.letters()) {
    if (l.sym == stable_sym()) {
      flush(e.tail.empty() ? &e.head : &e.tail.back().g);
      e.tail.push_back({l.sign, Word()});
    } else if (l.sym >= 0 && l.sym < stable_sym()) {
      seg = seg * Word::letter(l.sym, l.sign);
    } else {
      fail(ErrorCode::UnknownSymbol, "letter outside the extension alphabet");
    }
  }
  flush(e.tail.empty() ? &e.head : &e.tail.back().g);
  return e;
}

Word HnnExtension::to_word(const HnnElement& e) const {
  Word out = e.head;
  for (const HnnSyllable& s : e.tail)
    out = out * Word::letter(stable_sym(), s.eps) * s.g;
  return out;
}

HnnElement HnnExtension::britton_reduce(const HnnElement& e) const {
  HnnElement out;
  out.head = base_.canonical_word(e.head);
  for (const HnnSyllable& syl : e.tail) {
    Word g = base_.canonical_word(syl.g);
    if (!out.tail.empty()) {
      HnnSyllable& top = out.tail.back();
      bool down_up = top.eps == -1 && syl.eps == +1 && A_->member(top.g);
      bool up_down = top.eps == +1 && syl.eps == -1 && B_->member(top.g);
      if (down_up || up_down) {
        Word f = down_up ? apply_phi(top.g) : apply_phi_inverse(top.g);
        out.tail.pop_back();
        Word& dest = out.tail.empty() ? out.head : out.tail.back().g;
        dest = base_.canonical_word(dest * f * g);
        continue;
      }
    }
    out.tail.push_back({syl.eps, g});
  }
  return out;
}

bool HnnExtension::is_identity(const HnnElement& e) const {
  HnnElement red = britton_reduce(e);
  return red.tail.empty() && base_.is_identity(red.head);
}

bool HnnExtension::is_identity(const Word& w) const {
  return is_identity(to_element(w));
}

AscendingForm HnnExtension::ascending_normal_form(const HnnElement& e) const {
  if (A_->is_proper())
    fail(ErrorCode::NotAscending,
         "ascending form needs A to be the whole base group");
  AscendingForm f;
  auto absorb = [&](const Word& s) {
    Word img = s;
    for (long long i = 0; i < f.q; ++i) img = apply_phi(img);
    f.g = base_.canonical_word(f.g * img);
  };
  absorb(e.head);
  for (const HnnSyllable& syl : e.tail) {
    if (syl.eps > 0) {
      if (f.q > 0) {
        --f.q;
      } else {
        ++f.p;
        f.g = apply_phi(f.g);
      }
    } else {
      ++f.q;
    }
    absorb(syl.g);
  }
  while (f.p >= 1 && f.q >= 1 && B_->member(f.g)) {
    f.g = apply_phi_inverse(f.g);
    --f.p;
    --f.q;
  }
  return f;
}

AscendingForm HnnExtension::ascending_normal_form(const Word& w) const {
  return ascending_normal_form(to_element(w));
}

namespace {

// t^pos s t^neg as a syllable chain (pos, neg are signed exponents)
HnnElement stable_conjugate(const Word& s, long long pos, long long neg) {
  HnnElement e;
  if (pos == 0) {
    e.head = s;
  } else {
    int eps = pos > 0 ? +1 : -1;
    for (long long i = 0; i < std::llabs(pos); ++i) e.tail.push_back({eps, Word()});
    e.tail.back().g = s;
  }
  if (neg != 0) {
    int eps = neg > 0 ? +1 : -1;
    for (long long i = 0; i < std::llabs(neg); ++i) e.tail.push_back({eps, Word()});
  }
  return e;
}

HnnElement element_mul(const HnnElement& x, const HnnElement& y) {
  HnnElement out = x;
  Word& last = out.tail.empty() ? out.head : out.tail.back().g;
  last = last * y.head;
  out.tail.insert(out.tail.end(), y.tail.begin(), y.tail.end());
  return out;
}

HnnElement element_inverse(const HnnElement& x) {
  HnnElement out;
  out.head = (x.tail.empty() ? x.head : x.tail.back().g).inverse();
  for (size_t i = x.tail.size(); i-- > 0;) {
    const Word& prev = i == 0 ? x.head : x.tail[i - 1].g;
    out.tail.push_back({-x.tail[i].eps, prev.inverse()});
  }
  return out;
}

HnnElement element_pow(const HnnElement& x, long long n) {
  HnnElement base = n < 0 ? element_inverse(x) : x;
  HnnElement out;
  for (long long i = 0; i < std::llabs(n); ++i) out = element_mul(out, base);
  return out;
}

HnnElement bare_stable() {
  HnnElement t;
  t.tail.push_back({+1, Word()});
  return t;
}

void check_witness_base_word(const HnnExtension& h, const Word& s) {
  if (h.base().is_identity(s))
    fail(ErrorCode::IdentityGenerator,
         "witness base generators must be nontrivial");
}

}  // namespace

std::vector<HnnElement> build_witness_avoiding(const HnnExtension& h,
                                               const std::vector<Word>& S,
                                               long long r) {
  if (r < 1)
    fail(ErrorCode::PreconditionViolated, "witness parameter r must be >= 1");
  if (S.empty())
    fail(ErrorCode::PreconditionViolated, "witness needs base generators");
  for (size_t i = 0; i < S.size(); ++i) {
    check_witness_base_word(h, S[i]);
    if (h.A().member(S[i]) || h.B().member(S[i]))
      fail(ErrorCode::GeneratorInSubgroup,
           "generator " + std::to_string(i + 1) + " lies in A or B");
  }
  std::vector<HnnElement> out{bare_stable()};
  for (size_t i = 1; i <= S.size(); ++i) {
    long long k = static_cast<long long>(i);
    out.push_back(stable_conjugate(h.base().canonical_word(S[i - 1]),
                                   (2 * k - 1) * r, -2 * k * r));
  }
  return out;
}

std::vector<HnnElement> build_witness_one_sided(const HnnExtension& h,
                                                const std::vector<Word>& S,
                                                long long r) {
  if (r < 1)
    fail(ErrorCode::PreconditionViolated, "witness parameter r must be >= 1");
  size_t n = S.size();
  if (n < 2)
    fail(ErrorCode::PreconditionViolated,
         "the one-sided witness needs at least two base generators");
  for (size_t i = 0; i < n; ++i) {
    check_witness_base_word(h, S[i]);
    if (h.B().member(S[i]))
      fail(ErrorCode::PreconditionViolated,
           "generator " + std::to_string(i + 1) + " lies in B");
    if (i + 1 < n && h.A().member(S[i]))
      fail(ErrorCode::PreconditionViolated,
           "generator " + std::to_string(i + 1) + " lies in A");
  }
  std::vector<HnnElement> out{bare_stable()};
  for (size_t i = 1; i <= n - 1; ++i) {
    long long k = static_cast<long long>(i);
    out.push_back(stable_conjugate(h.base().canonical_word(S[i - 1]),
                                   -(2 * k - 1) * r, (2 * k) * r));
  }
  const HnnElement& u = out.back();
  HnnElement last = element_mul(
      element_pow(u, r),
      element_mul(stable_conjugate(h.base().canonical_word(S[n - 1]), 0, 0),
                  element_pow(u, -2 * r)));
  out.push_back(std::move(last));
  return out;
}

std::vector<HnnElement> build_witness_dihedral(const HnnExtension& h,
                                               long long r) {
  if (h.base().kind() != GroupKind::Dihedral)
    fail(ErrorCode::PreconditionViolated,
         "the dihedral witness needs a dihedral base");
  if (r < 1)
    fail(ErrorCode::PreconditionViolated, "witness parameter r must be >= 1");
  Word a = Word::letter(0, +1), b = Word::letter(1, +1);
  if (!h.A().member(a))
    fail(ErrorCode::PreconditionViolated, "a must lie in A");
  if (!h.B().member(b))
    fail(ErrorCode::PreconditionViolated, "b must lie in B");
  return {bare_stable(), stable_conjugate(a, r, -2 * r),
          stable_conjugate(b, -r, 2 * r)};
}

}  // namespace girthlab
