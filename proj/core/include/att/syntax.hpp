#pragma once

#include <memory>
#include <optional>
#include <string>
#include <variant>
#include <vector>

// Abstract syntax for the axiomatic type theory kernel.
//
// Variables are nameless indices into the context telescope, counted from
// the *outside* (var 0 is the first entry). With this convention weakening
// at the end of a telescope does not renumber anything, so the substitution
// extensions f. (one fresh variable) and f.. (two fresh variables) are
// literal list appends and the splitness equations x[id] = x and
// x[f][g] = x[f o g] hold as structural identities.
//
// Surface binder names survive only as display hints; they are ignored by
// equality.

namespace att {

struct TypeExpr;
struct Term;

using TypePtr = std::shared_ptr<const TypeExpr>;
using TermPtr = std::shared_ptr<const Term>;

struct Span {
  int line = 0;
  int col = 0;
};

// A motive abstraction: binders extending the ambient context, then a type.
// Annotations are optional in surface syntax; the checker fills and verifies
// them against the rule schema.
struct Motive {
  std::vector<std::string> names;
  std::vector<TypePtr> anns;  // entries may be null (elided)
  TypePtr body;
};

// A term family: binders extending the ambient context, then a term.
struct Family {
  std::vector<std::string> names;
  std::vector<TypePtr> anns;  // entries may be null (elided)
  TermPtr body;
};

// ---- terms ----------------------------------------------------------------

struct Var {
  int index = 0;
  std::string hint;
};
struct Refl {
  TermPtr arg;
};
struct JElim {  // J(motive, family, t, u, p)
  Motive motive;
  Family fam;
  TermPtr left, right, path;
};
struct HComp {  // H(motive, family, t)
  Motive motive;
  Family fam;
  TermPtr arg;
};
struct PairTm {
  TermPtr fst, snd;
};
struct Split {  // split(motive, family, w)
  Motive motive;
  Family fam;
  TermPtr scrut;
};
struct SigmaComp {  // sigma(motive, family, t, s)
  Motive motive;
  Family fam;
  TermPtr fst, snd;
};
struct Lam {
  std::string name;
  TypePtr ann;  // may be null; required for synthesis
  TermPtr body;
};
struct Ev {
  TermPtr fn, arg;
};
struct BetaEv {  // beta(family, t)
  Family fam;
  TermPtr arg;
};
struct Funext {
  TermPtr lhs, rhs, ptwise;
};
struct BetaPi {  // betaPi(z, z', q)
  TermPtr lhs, rhs, ptwise;
};
struct EtaPi {  // etaPi(z, z', p)
  TermPtr lhs, rhs, path;
};
struct Star {};
struct BotTm {};
struct TopTm {};
struct ZeroTm {};
struct Succ {
  TermPtr arg;
};
struct Ind0 {
  Motive motive;
  TermPtr scrut;
};
struct Ind1 {
  Motive motive;
  TermPtr base, scrut;
};
struct Beta1 {
  Motive motive;
  TermPtr base;
};
struct Ind2 {
  Motive motive;
  TermPtr fbr, tbr, scrut;
};
struct Beta2Bot {
  Motive motive;
  TermPtr fbr, tbr;
};
struct Beta2Top {
  Motive motive;
  TermPtr fbr, tbr;
};
struct IndNat {
  Motive motive;
  TermPtr base;
  Family step;
  TermPtr scrut;
};
struct BetaNatZero {
  Motive motive;
  TermPtr base;
  Family step;
};
struct BetaNatSucc {
  Motive motive;
  TermPtr base;
  Family step;
  TermPtr arg;
};

using TermNode =
    std::variant<Var, Refl, JElim, HComp, PairTm, Split, SigmaComp, Lam, Ev,
                 BetaEv, Funext, BetaPi, EtaPi, Star, BotTm, TopTm, ZeroTm,
                 Succ, Ind0, Ind1, Beta1, Ind2, Beta2Bot, Beta2Top, IndNat,
                 BetaNatZero, BetaNatSucc>;

struct Term {
  TermNode node;
  Span span;
};

// ---- types ----------------------------------------------------------------

struct BaseRef {
  std::string name;
};
struct IdTy {
  TypePtr type;  // may be null when written infix (t = u); checker elaborates
  TermPtr lhs, rhs;
};
struct SigmaTy {
  std::string name;
  TypePtr domain, body;
};
struct PiTy {
  std::string name;
  TypePtr domain, body;
};
struct ZeroTy {};
struct OneTy {};
struct TwoTy {};
struct NatTy {};

using TypeNode =
    std::variant<BaseRef, IdTy, SigmaTy, PiTy, ZeroTy, OneTy, TwoTy, NatTy>;

struct TypeExpr {
  TypeNode node;
  Span span;
};

// ---- contexts, substitutions, judgments -----------------------------------

struct Context {
  std::vector<TypePtr> entries;
  std::vector<std::string> names;

  int size() const { return static_cast<int>(entries.size()); }
};

// A substitution f : Delta -> Gamma is a list of Delta-terms, one per entry
// of Gamma. dom_size is |Delta|; it is needed to extend f under binders.
struct Subst {
  int dom_size = 0;
  std::vector<TermPtr> entries;

  int target_size() const { return static_cast<int>(entries.size()); }
};

struct Judgment {
  enum class Kind { Ctx, Type, Term, TypeEq, TermEq };
  Kind kind = Kind::Ctx;
  Context ctx;
  TypePtr type, type2;
  TermPtr term, term2;
};

// Declared base types (opaque, closed).
struct Signature {
  std::vector<std::string> base_types;

  bool declared(const std::string& n) const;
};

struct ParsedFile {
  Signature sig;
  std::vector<Judgment> judgments;
};

// ---- constructors ----------------------------------------------------------

TermPtr mk_term(TermNode n, Span s = {});
TypePtr mk_type(TypeNode n, Span s = {});

TermPtr var(int index, std::string hint = "");
TypePtr base(std::string name);
TypePtr id_ty(TypePtr a, TermPtr l, TermPtr r);
TypePtr nat_ty();
TypePtr zero_ty();
TypePtr one_ty();
TypePtr two_ty();

// ---- equality ---------------------------------------------------------------

// Structural alpha-equality; binder hints and spans are ignored, optional
// annotations compare as data (null == null).
bool equal(const TypePtr& a, const TypePtr& b);
bool equal(const TermPtr& a, const TermPtr& b);
bool equal(const Motive& a, const Motive& b);
bool equal(const Family& a, const Family& b);
bool equal(const Context& a, const Context& b);
bool equal(const Subst& a, const Subst& b);
bool equal(const Judgment& a, const Judgment& b);

// ---- substitution and weakening ---------------------------------------------

Subst identity_subst(int n);

// Substitution targeting Gamma.A.A_bar built from two parallel terms over
// Gamma; the list is id_Gamma ++ [a, b].
Subst pair_subst(int gamma_size, TermPtr a, TermPtr b);

// Extend f : Delta -> Gamma with k fresh variables: Delta.X1..Xk -> Gamma.X1..Xk.
Subst extend(const Subst& f, int k);

// Compose: subst(x, compose(f, g)) == subst(subst(x, f), g).
Subst compose(const Subst& f, const Subst& g);

TypePtr subst_type(const TypePtr& a, const Subst& f);
TermPtr subst_term(const TermPtr& t, const Subst& f);

// Insert one fresh telescope entry at position `at` of a context of size
// `ctx_size`; indices >= at shift up.
TypePtr weaken_type(const TypePtr& a, int at, int ctx_size);
TermPtr weaken_term(const TermPtr& t, int at, int ctx_size);

// The weakening substitution itself: Gamma -> Gamma-with-insert-at.
Subst weakening_subst(int ctx_size, int at);

// ---- size -------------------------------------------------------------------

std::size_t term_size(const TermPtr& t);
std::size_t type_size(const TypePtr& a);

}  // namespace att
