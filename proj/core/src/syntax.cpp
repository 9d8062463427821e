#include "att/syntax.hpp"

#include <algorithm>
#include <stdexcept>

namespace att {

namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

}  // namespace

bool Signature::declared(const std::string& n) const {
  return std::find(base_types.begin(), base_types.end(), n) != base_types.end();
}

TermPtr mk_term(TermNode n, Span s) {
  return std::make_shared<const Term>(Term{std::move(n), s});
}
TypePtr mk_type(TypeNode n, Span s) {
  return std::make_shared<const TypeExpr>(TypeExpr{std::move(n), s});
}

TermPtr var(int index, std::string hint) {
  return mk_term(Var{index, std::move(hint)});
}
TypePtr base(std::string name) { return mk_type(BaseRef{std::move(name)}); }
TypePtr id_ty(TypePtr a, TermPtr l, TermPtr r) {
  return mk_type(IdTy{std::move(a), std::move(l), std::move(r)});
}
TypePtr nat_ty() { return mk_type(NatTy{}); }
TypePtr zero_ty() { return mk_type(ZeroTy{}); }
TypePtr one_ty() { return mk_type(OneTy{}); }
TypePtr two_ty() { return mk_type(TwoTy{}); }

// ---- equality ---------------------------------------------------------------

static bool equal_opt(const TypePtr& a, const TypePtr& b) {
  if (!a || !b) return !a && !b;
  return equal(a, b);
}

bool equal(const Motive& a, const Motive& b) {
  if (a.names.size() != b.names.size()) return false;
  if (a.anns.size() != b.anns.size()) return false;
  for (std::size_t i = 0; i < a.anns.size(); ++i)
    if (!equal_opt(a.anns[i], b.anns[i])) return false;
  return equal(a.body, b.body);
}

bool equal(const Family& a, const Family& b) {
  if (a.names.size() != b.names.size()) return false;
  if (a.anns.size() != b.anns.size()) return false;
  for (std::size_t i = 0; i < a.anns.size(); ++i)
    if (!equal_opt(a.anns[i], b.anns[i])) return false;
  return equal(a.body, b.body);
}

bool equal(const TermPtr& a, const TermPtr& b) {
  if (a == b) return true;
  if (!a || !b) return false;
  if (a->node.index() != b->node.index()) return false;
  return std::visit(
      overloaded{
          [&](const Var& x) { return x.index == std::get<Var>(b->node).index; },
          [&](const Refl& x) { return equal(x.arg, std::get<Refl>(b->node).arg); },
          [&](const JElim& x) {
            const auto& y = std::get<JElim>(b->node);
            return equal(x.motive, y.motive) && equal(x.fam, y.fam) &&
                   equal(x.left, y.left) && equal(x.right, y.right) &&
                   equal(x.path, y.path);
          },
          [&](const HComp& x) {
            const auto& y = std::get<HComp>(b->node);
            return equal(x.motive, y.motive) && equal(x.fam, y.fam) &&
                   equal(x.arg, y.arg);
          },
          [&](const PairTm& x) {
            const auto& y = std::get<PairTm>(b->node);
            return equal(x.fst, y.fst) && equal(x.snd, y.snd);
          },
          [&](const Split& x) {
            const auto& y = std::get<Split>(b->node);
            return equal(x.motive, y.motive) && equal(x.fam, y.fam) &&
                   equal(x.scrut, y.scrut);
          },
          [&](const SigmaComp& x) {
            const auto& y = std::get<SigmaComp>(b->node);
            return equal(x.motive, y.motive) && equal(x.fam, y.fam) &&
                   equal(x.fst, y.fst) && equal(x.snd, y.snd);
          },
          [&](const Lam& x) {
            const auto& y = std::get<Lam>(b->node);
            return equal_opt(x.ann, y.ann) && equal(x.body, y.body);
          },
          [&](const Ev& x) {
            const auto& y = std::get<Ev>(b->node);
            return equal(x.fn, y.fn) && equal(x.arg, y.arg);
          },
          [&](const BetaEv& x) {
            const auto& y = std::get<BetaEv>(b->node);
            return equal(x.fam, y.fam) && equal(x.arg, y.arg);
          },
          [&](const Funext& x) {
            const auto& y = std::get<Funext>(b->node);
            return equal(x.lhs, y.lhs) && equal(x.rhs, y.rhs) &&
                   equal(x.ptwise, y.ptwise);
          },
          [&](const BetaPi& x) {
            const auto& y = std::get<BetaPi>(b->node);
            return equal(x.lhs, y.lhs) && equal(x.rhs, y.rhs) &&
                   equal(x.ptwise, y.ptwise);
          },
          [&](const EtaPi& x) {
            const auto& y = std::get<EtaPi>(b->node);
            return equal(x.lhs, y.lhs) && equal(x.rhs, y.rhs) &&
                   equal(x.path, y.path);
          },
          [&](const Star&) { return true; },
          [&](const BotTm&) { return true; },
          [&](const TopTm&) { return true; },
          [&](const ZeroTm&) { return true; },
          [&](const Succ& x) { return equal(x.arg, std::get<Succ>(b->node).arg); },
          [&](const Ind0& x) {
            const auto& y = std::get<Ind0>(b->node);
            return equal(x.motive, y.motive) && equal(x.scrut, y.scrut);
          },
          [&](const Ind1& x) {
            const auto& y = std::get<Ind1>(b->node);
            return equal(x.motive, y.motive) && equal(x.base, y.base) &&
                   equal(x.scrut, y.scrut);
          },
          [&](const Beta1& x) {
            const auto& y = std::get<Beta1>(b->node);
            return equal(x.motive, y.motive) && equal(x.base, y.base);
          },
          [&](const Ind2& x) {
            const auto& y = std::get<Ind2>(b->node);
            return equal(x.motive, y.motive) && equal(x.fbr, y.fbr) &&
                   equal(x.tbr, y.tbr) && equal(x.scrut, y.scrut);
          },
          [&](const Beta2Bot& x) {
            const auto& y = std::get<Beta2Bot>(b->node);
            return equal(x.motive, y.motive) && equal(x.fbr, y.fbr) &&
                   equal(x.tbr, y.tbr);
          },
          [&](const Beta2Top& x) {
            const auto& y = std::get<Beta2Top>(b->node);
            return equal(x.motive, y.motive) && equal(x.fbr, y.fbr) &&
                   equal(x.tbr, y.tbr);
          },
          [&](const IndNat& x) {
            const auto& y = std::get<IndNat>(b->node);
            return equal(x.motive, y.motive) && equal(x.base, y.base) &&
                   equal(x.step, y.step) && equal(x.scrut, y.scrut);
          },
          [&](const BetaNatZero& x) {
            const auto& y = std::get<BetaNatZero>(b->node);
            return equal(x.motive, y.motive) && equal(x.base, y.base) &&
                   equal(x.step, y.step);
          },
          [&](const BetaNatSucc& x) {
            const auto& y = std::get<BetaNatSucc>(b->node);
            return equal(x.motive, y.motive) && equal(x.base, y.base) &&
                   equal(x.step, y.step) && equal(x.arg, y.arg);
          },
      },
      a->node);
}

bool equal(const TypePtr& a, const TypePtr& b) {
  if (a == b) return true;
  if (!a || !b) return false;
  if (a->node.index() != b->node.index()) return false;
  return std::visit(
      overloaded{
          [&](const BaseRef& x) {
            return x.name == std::get<BaseRef>(b->node).name;
          },
          [&](const IdTy& x) {
            const auto& y = std::get<IdTy>(b->node);
            return equal_opt(x.type, y.type) && equal(x.lhs, y.lhs) &&
                   equal(x.rhs, y.rhs);
          },
          [&](const SigmaTy& x) {
            const auto& y = std::get<SigmaTy>(b->node);
            return equal(x.domain, y.domain) && equal(x.body, y.body);
          },
          [&](const PiTy& x) {
            const auto& y = std::get<PiTy>(b->node);
            return equal(x.domain, y.domain) && equal(x.body, y.body);
          },
          [&](const ZeroTy&) { return true; },
          [&](const OneTy&) { return true; },
          [&](const TwoTy&) { return true; },
          [&](const NatTy&) { return true; },
      },
      a->node);
}

bool equal(const Context& a, const Context& b) {
  if (a.entries.size() != b.entries.size()) return false;
  for (std::size_t i = 0; i < a.entries.size(); ++i)
    if (!equal(a.entries[i], b.entries[i])) return false;
  return true;
}

bool equal(const Subst& a, const Subst& b) {
  if (a.dom_size != b.dom_size) return false;
  if (a.entries.size() != b.entries.size()) return false;
  for (std::size_t i = 0; i < a.entries.size(); ++i)
    if (!equal(a.entries[i], b.entries[i])) return false;
  return true;
}

bool equal(const Judgment& a, const Judgment& b) {
  if (a.kind != b.kind) return false;
  if (!equal(a.ctx, b.ctx)) return false;
  return equal_opt(a.type, b.type) && equal_opt(a.type2, b.type2) &&
         ((!a.term && !b.term) || (a.term && b.term && equal(a.term, b.term))) &&
         ((!a.term2 && !b.term2) ||
          (a.term2 && b.term2 && equal(a.term2, b.term2)));
}

// ---- substitution ------------------------------------------------------------

Subst identity_subst(int n) {
  Subst f;
  f.dom_size = n;
  f.entries.reserve(n);
  for (int i = 0; i < n; ++i) f.entries.push_back(var(i));
  return f;
}

Subst pair_subst(int gamma_size, TermPtr a, TermPtr b) {
  Subst f = identity_subst(gamma_size);
  f.entries.push_back(std::move(a));
  f.entries.push_back(std::move(b));
  return f;
}

Subst extend(const Subst& f, int k) {
  Subst g = f;
  for (int i = 0; i < k; ++i) g.entries.push_back(var(g.dom_size + i));
  g.dom_size += k;
  return g;
}

static TypePtr subst_opt(const TypePtr& a, const Subst& f) {
  return a ? subst_type(a, f) : nullptr;
}

static Motive subst_motive(const Motive& m, const Subst& f) {
  Motive out;
  out.names = m.names;
  Subst g = f;
  for (std::size_t i = 0; i < m.anns.size(); ++i) {
    out.anns.push_back(subst_opt(m.anns[i], g));
    g = extend(g, 1);
  }
  out.body = subst_type(m.body, g);
  return out;
}

static Family subst_family(const Family& m, const Subst& f) {
  Family out;
  out.names = m.names;
  Subst g = f;
  for (std::size_t i = 0; i < m.anns.size(); ++i) {
    out.anns.push_back(subst_opt(m.anns[i], g));
    g = extend(g, 1);
  }
  out.body = subst_term(m.body, g);
  return out;
}

TermPtr subst_term(const TermPtr& t, const Subst& f) {
  const Span sp = t->span;
  return std::visit(
      overloaded{
          [&](const Var& x) -> TermPtr {
            if (x.index < 0 || x.index >= f.target_size())
              throw std::out_of_range("substitution arity mismatch at variable " +
                                      std::to_string(x.index));
            return f.entries[x.index];
          },
          [&](const Refl& x) -> TermPtr {
            return mk_term(Refl{subst_term(x.arg, f)}, sp);
          },
          [&](const JElim& x) -> TermPtr {
            return mk_term(JElim{subst_motive(x.motive, f),
                                 subst_family(x.fam, f), subst_term(x.left, f),
                                 subst_term(x.right, f), subst_term(x.path, f)},
                           sp);
          },
          [&](const HComp& x) -> TermPtr {
            return mk_term(HComp{subst_motive(x.motive, f),
                                 subst_family(x.fam, f), subst_term(x.arg, f)},
                           sp);
          },
          [&](const PairTm& x) -> TermPtr {
            return mk_term(PairTm{subst_term(x.fst, f), subst_term(x.snd, f)},
                           sp);
          },
          [&](const Split& x) -> TermPtr {
            return mk_term(Split{subst_motive(x.motive, f),
                                 subst_family(x.fam, f),
                                 subst_term(x.scrut, f)},
                           sp);
          },
          [&](const SigmaComp& x) -> TermPtr {
            return mk_term(SigmaComp{subst_motive(x.motive, f),
                                     subst_family(x.fam, f),
                                     subst_term(x.fst, f), subst_term(x.snd, f)},
                           sp);
          },
          [&](const Lam& x) -> TermPtr {
            return mk_term(Lam{x.name, subst_opt(x.ann, f),
                               subst_term(x.body, extend(f, 1))},
                           sp);
          },
          [&](const Ev& x) -> TermPtr {
            return mk_term(Ev{subst_term(x.fn, f), subst_term(x.arg, f)}, sp);
          },
          [&](const BetaEv& x) -> TermPtr {
            return mk_term(BetaEv{subst_family(x.fam, f), subst_term(x.arg, f)},
                           sp);
          },
          [&](const Funext& x) -> TermPtr {
            return mk_term(Funext{subst_term(x.lhs, f), subst_term(x.rhs, f),
                                  subst_term(x.ptwise, f)},
                           sp);
          },
          [&](const BetaPi& x) -> TermPtr {
            return mk_term(BetaPi{subst_term(x.lhs, f), subst_term(x.rhs, f),
                                  subst_term(x.ptwise, f)},
                           sp);
          },
          [&](const EtaPi& x) -> TermPtr {
            return mk_term(EtaPi{subst_term(x.lhs, f), subst_term(x.rhs, f),
                                 subst_term(x.path, f)},
                           sp);
          },
          [&](const Star&) -> TermPtr { return mk_term(Star{}, sp); },
          [&](const BotTm&) -> TermPtr { return mk_term(BotTm{}, sp); },
          [&](const TopTm&) -> TermPtr { return mk_term(TopTm{}, sp); },
          [&](const ZeroTm&) -> TermPtr { return mk_term(ZeroTm{}, sp); },
          [&](const Succ& x) -> TermPtr {
            return mk_term(Succ{subst_term(x.arg, f)}, sp);
          },
          [&](const Ind0& x) -> TermPtr {
            return mk_term(Ind0{subst_motive(x.motive, f),
                                subst_term(x.scrut, f)},
                           sp);
          },
          [&](const Ind1& x) -> TermPtr {
            return mk_term(Ind1{subst_motive(x.motive, f),
                                subst_term(x.base, f), subst_term(x.scrut, f)},
                           sp);
          },
          [&](const Beta1& x) -> TermPtr {
            return mk_term(Beta1{subst_motive(x.motive, f),
                                 subst_term(x.base, f)},
                           sp);
          },
          [&](const Ind2& x) -> TermPtr {
            return mk_term(Ind2{subst_motive(x.motive, f), subst_term(x.fbr, f),
                                subst_term(x.tbr, f), subst_term(x.scrut, f)},
                           sp);
          },
          [&](const Beta2Bot& x) -> TermPtr {
            return mk_term(Beta2Bot{subst_motive(x.motive, f),
                                    subst_term(x.fbr, f), subst_term(x.tbr, f)},
                           sp);
          },
          [&](const Beta2Top& x) -> TermPtr {
            return mk_term(Beta2Top{subst_motive(x.motive, f),
                                    subst_term(x.fbr, f), subst_term(x.tbr, f)},
                           sp);
          },
          [&](const IndNat& x) -> TermPtr {
            return mk_term(IndNat{subst_motive(x.motive, f),
                                  subst_term(x.base, f),
                                  subst_family(x.step, f),
                                  subst_term(x.scrut, f)},
                           sp);
          },
          [&](const BetaNatZero& x) -> TermPtr {
            return mk_term(BetaNatZero{subst_motive(x.motive, f),
                                       subst_term(x.base, f),
                                       subst_family(x.step, f)},
                           sp);
          },
          [&](const BetaNatSucc& x) -> TermPtr {
            return mk_term(BetaNatSucc{subst_motive(x.motive, f),
                                       subst_term(x.base, f),
                                       subst_family(x.step, f),
                                       subst_term(x.arg, f)},
                           sp);
          },
      },
      t->node);
}

TypePtr subst_type(const TypePtr& a, const Subst& f) {
  const Span sp = a->span;
  return std::visit(
      overloaded{
          [&](const BaseRef& x) -> TypePtr { return mk_type(BaseRef{x.name}, sp); },
          [&](const IdTy& x) -> TypePtr {
            return mk_type(IdTy{subst_opt(x.type, f), subst_term(x.lhs, f),
                                subst_term(x.rhs, f)},
                           sp);
          },
          [&](const SigmaTy& x) -> TypePtr {
            return mk_type(SigmaTy{x.name, subst_type(x.domain, f),
                                   subst_type(x.body, extend(f, 1))},
                           sp);
          },
          [&](const PiTy& x) -> TypePtr {
            return mk_type(PiTy{x.name, subst_type(x.domain, f),
                                subst_type(x.body, extend(f, 1))},
                           sp);
          },
          [&](const ZeroTy&) -> TypePtr { return mk_type(ZeroTy{}, sp); },
          [&](const OneTy&) -> TypePtr { return mk_type(OneTy{}, sp); },
          [&](const TwoTy&) -> TypePtr { return mk_type(TwoTy{}, sp); },
          [&](const NatTy&) -> TypePtr { return mk_type(NatTy{}, sp); },
      },
      a->node);
}

Subst compose(const Subst& f, const Subst& g) {
  Subst h;
  h.dom_size = g.dom_size;
  h.entries.reserve(f.entries.size());
  for (const auto& e : f.entries) h.entries.push_back(subst_term(e, g));
  return h;
}

// Weakening: the substitution whose entries skip index `at`.
Subst weakening_subst(int ctx_size, int at) {
  Subst f;
  f.dom_size = ctx_size + 1;
  f.entries.reserve(ctx_size);
  for (int i = 0; i < ctx_size; ++i) f.entries.push_back(var(i < at ? i : i + 1));
  return f;
}

TypePtr weaken_type(const TypePtr& a, int at, int ctx_size) {
  return subst_type(a, weakening_subst(ctx_size, at));
}

TermPtr weaken_term(const TermPtr& t, int at, int ctx_size) {
  return subst_term(t, weakening_subst(ctx_size, at));
}

// ---- size ---------------------------------------------------------------------

static std::size_t motive_size(const Motive& m) {
  std::size_t s = 1;
  for (const auto& a : m.anns)
    if (a) s += type_size(a);
  return s + type_size(m.body);
}
static std::size_t family_size(const Family& m) {
  std::size_t s = 1;
  for (const auto& a : m.anns)
    if (a) s += type_size(a);
  return s + term_size(m.body);
}

std::size_t term_size(const TermPtr& t) {
  return std::visit(
      overloaded{
          [&](const Var&) -> std::size_t { return 1; },
          [&](const Refl& x) { return 1 + term_size(x.arg); },
          [&](const JElim& x) {
            return 1 + motive_size(x.motive) + family_size(x.fam) +
                   term_size(x.left) + term_size(x.right) + term_size(x.path);
          },
          [&](const HComp& x) {
            return 1 + motive_size(x.motive) + family_size(x.fam) +
                   term_size(x.arg);
          },
          [&](const PairTm& x) { return 1 + term_size(x.fst) + term_size(x.snd); },
          [&](const Split& x) {
            return 1 + motive_size(x.motive) + family_size(x.fam) +
                   term_size(x.scrut);
          },
          [&](const SigmaComp& x) {
            return 1 + motive_size(x.motive) + family_size(x.fam) +
                   term_size(x.fst) + term_size(x.snd);
          },
          [&](const Lam& x) {
            return 1 + (x.ann ? type_size(x.ann) : 0) + term_size(x.body);
          },
          [&](const Ev& x) { return 1 + term_size(x.fn) + term_size(x.arg); },
          [&](const BetaEv& x) { return 1 + family_size(x.fam) + term_size(x.arg); },
          [&](const Funext& x) {
            return 1 + term_size(x.lhs) + term_size(x.rhs) + term_size(x.ptwise);
          },
          [&](const BetaPi& x) {
            return 1 + term_size(x.lhs) + term_size(x.rhs) + term_size(x.ptwise);
          },
          [&](const EtaPi& x) {
            return 1 + term_size(x.lhs) + term_size(x.rhs) + term_size(x.path);
          },
          [&](const Star&) -> std::size_t { return 1; },
          [&](const BotTm&) -> std::size_t { return 1; },
          [&](const TopTm&) -> std::size_t { return 1; },
          [&](const ZeroTm&) -> std::size_t { return 1; },
          [&](const Succ& x) { return 1 + term_size(x.arg); },
          [&](const Ind0& x) { return 1 + motive_size(x.motive) + term_size(x.scrut); },
          [&](const Ind1& x) {
            return 1 + motive_size(x.motive) + term_size(x.base) +
                   term_size(x.scrut);
          },
          [&](const Beta1& x) { return 1 + motive_size(x.motive) + term_size(x.base); },
          [&](const Ind2& x) {
            return 1 + motive_size(x.motive) + term_size(x.fbr) +
                   term_size(x.tbr) + term_size(x.scrut);
          },
          [&](const Beta2Bot& x) {
            return 1 + motive_size(x.motive) + term_size(x.fbr) + term_size(x.tbr);
          },
          [&](const Beta2Top& x) {
            return 1 + motive_size(x.motive) + term_size(x.fbr) + term_size(x.tbr);
          },
          [&](const IndNat& x) {
            return 1 + motive_size(x.motive) + term_size(x.base) +
                   family_size(x.step) + term_size(x.scrut);
          },
          [&](const BetaNatZero& x) {
            return 1 + motive_size(x.motive) + term_size(x.base) +
                   family_size(x.step);
          },
          [&](const BetaNatSucc& x) {
            return 1 + motive_size(x.motive) + term_size(x.base) +
                   family_size(x.step) + term_size(x.arg);
          },
      },
      t->node);
}

std::size_t type_size(const TypePtr& a) {
  return std::visit(
      overloaded{
          [&](const BaseRef&) -> std::size_t { return 1; },
          [&](const IdTy& x) {
            return 1 + (x.type ? type_size(x.type) : 0) + term_size(x.lhs) +
                   term_size(x.rhs);
          },
          [&](const SigmaTy& x) { return 1 + type_size(x.domain) + type_size(x.body); },
          [&](const PiTy& x) { return 1 + type_size(x.domain) + type_size(x.body); },
          [&](const ZeroTy&) -> std::size_t { return 1; },
          [&](const OneTy&) -> std::size_t { return 1; },
          [&](const TwoTy&) -> std::size_t { return 1; },
          [&](const NatTy&) -> std::size_t { return 1; },
      },
      a->node);
}

}  // namespace att
