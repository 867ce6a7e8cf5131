#pragma once

// Random instances for property tests and the law suites.

#include <random>
#include <vector>

#include "unbias/finspan.hpp"
#include "unbias/free_smc.hpp"
#include "unbias/kleisli.hpp"

namespace unbias {

using Rng = std::mt19937_64;

std::size_t uniform(Rng& rng, std::size_t lo, std::size_t hi);  // inclusive
Perm random_perm(Rng& rng, std::size_t n);
Word random_word(Rng& rng, std::size_t n, std::size_t length);
FinFun random_fun(Rng& rng, std::size_t src, std::size_t dst);
Span random_span(Rng& rng, std::size_t source, std::size_t target, std::size_t max_apex);
KHom random_khom(Rng& rng, std::size_t src, std::size_t dst, std::size_t max_len);
// A family with every k appearing at most once overall in each list.
KHom random_linear_khom(Rng& rng, std::size_t src, std::size_t dst);

// Every function {0..src-1} -> {0..dst-1}.
std::vector<FinFun> all_funs(std::size_t src, std::size_t dst);
// Every span between the given sets with apex at most max_apex.
std::vector<Span> all_spans(std::size_t source, std::size_t target, std::size_t max_apex);

std::vector<std::string> generator_names(std::size_t n);
ObjTerm random_obj_term(Rng& rng, const std::vector<std::string>& gens, std::size_t depth);
MorTerm random_mor_from(Rng& rng, const ObjTerm& src, const std::vector<std::string>& gens, std::size_t depth);
MorTerm random_mor_term(Rng& rng, const std::vector<std::string>& gens, std::size_t depth);

// Terms obtained from t by one application of a symmetric monoidal axiom at
// some subterm, in either direction where the rule has a reverse.
std::vector<MorTerm> axiom_rewrites(const MorTerm& t);

}  // namespace unbias
