#ifndef TAME_RANDOM_HPP
#define TAME_RANDOM_HPP

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include <tame/formula.hpp>

namespace tame
{

// Seeded generators for property tests and the self-test corpus. Everything
// here is deterministic for a fixed seed.
class Generator
{
public:
    explicit Generator(std::uint64_t seed) : m_rng(seed) {}

    std::mt19937_64 &rng()
    {
        return m_rng;
    }

    long uniform(long lo, long hi)
    {
        return std::uniform_int_distribution<long>(lo, hi)(m_rng);
    }
    bool coin(double p = 0.5)
    {
        return std::bernoulli_distribution(p)(m_rng);
    }
    template <typename T>
    const T &pick(const std::vector<T> &v)
    {
        return v[static_cast<std::size_t>(uniform(0, static_cast<long>(v.size()) - 1))];
    }

    // p/q with |p| <= num_bound, 1 <= q <= den_bound.
    Rational rational(long num_bound = 20, long den_bound = 4)
    {
        Rational r(uniform(-num_bound, num_bound), uniform(1, den_bound));
        r.canonicalize();
        return r;
    }

    StarNum star(bool allow_infinite = true)
    {
        StarNum s(rational(6, 3));
        const long shape = uniform(0, allow_infinite ? 5 : 3);
        switch (shape) {
            case 0:
                break;
            case 1:
                s += StarNum::eps() * Rational(coin() ? 1 : -1);
                break;
            case 2:
                s += StarNum::scale(-1, rational(3, 2));
                s += StarNum::scale(-2, rational(3, 2));
                break;
            case 3:
                s = StarNum::eps() * Rational(coin() ? 1 : -1);
                break;
            case 4:
                s = StarNum::omega() * Rational(coin() ? 1 : -1) + s;
                break;
            default:
                s = StarNum::omega() * Rational(coin() ? 1 : -1) + StarNum::eps();
                break;
        }
        return s;
    }

    // Random linear term over `vars` with integer coefficients in [-cbound, cbound].
    LinTerm term(const std::vector<std::string> &vars, long cbound = 5, std::size_t max_vars = 3)
    {
        LinTerm t(Rational(uniform(-cbound, cbound)));
        const std::size_t k = static_cast<std::size_t>(uniform(1, static_cast<long>(std::min(max_vars, vars.size()))));
        for (std::size_t i = 0; i < k; ++i) {
            t += LinTerm::var(pick(vars), Rational(uniform(-cbound, cbound)));
        }
        if (t.is_constant()) {
            t += LinTerm::var(pick(vars), 1);
        }
        return t;
    }

    Formula atom(const std::vector<std::string> &vars, long cbound = 5)
    {
        const long r = uniform(0, 5);
        const Rel rel = r < 3 ? Rel::lt : (r < 5 ? Rel::le : Rel::eq);
        return mk_atom(term(vars, cbound), rel);
    }

    // Atom whose constant is a random star number.
    Formula star_atom(const std::vector<std::string> &vars, long cbound = 5)
    {
        const long r = uniform(0, 5);
        const Rel rel = r < 3 ? Rel::lt : (r < 5 ? Rel::le : Rel::eq);
        return mk_atom(term(vars, cbound) + LinTerm(star()), rel);
    }

    // Boolean combination of exactly `atoms` atoms.
    Formula boolean(const std::vector<std::string> &vars, int atoms, long cbound = 5)
    {
        return combine(atoms, [&] { return atom(vars, cbound); });
    }

    // Same, with star constants in the atoms.
    Formula star_boolean(const std::vector<std::string> &vars, int atoms, long cbound = 5)
    {
        return combine(atoms, [&] { return star_atom(vars, cbound); });
    }

    template <typename AtomGen>
    Formula combine(int atoms, AtomGen gen)
    {
        if (atoms <= 1) {
            Formula a = gen();
            return coin(0.15) ? mk_not(a) : a;
        }
        const int left = static_cast<int>(uniform(1, atoms - 1));
        Formula l = combine(left, gen);
        Formula r = combine(atoms - left, gen);
        const long op = uniform(0, 5);
        if (op < 3) {
            return mk_and(l, r);
        }
        if (op < 5) {
            return mk_or(l, r);
        }
        return mk_not(mk_and(l, r));
    }

    // Random first-order formula: free variables from `free_vars`, up to
    // `max_quantifiers` nested quantifiers over fresh bound names.
    Formula formula(const std::vector<std::string> &free_vars, int max_quantifiers, int max_atoms, long cbound = 5)
    {
        const std::vector<std::string> bound_names{"u", "v", "w"};
        const int nq = static_cast<int>(uniform(0, max_quantifiers));
        return formula_rec(free_vars, bound_names, nq, static_cast<int>(uniform(1, max_atoms)), cbound);
    }

private:
    Formula formula_rec(std::vector<std::string> scope, const std::vector<std::string> &bound_names, int nq, int atoms,
                        long cbound)
    {
        if (nq == 0) {
            return boolean(scope, atoms, cbound);
        }
        const std::string v = bound_names[bound_names.size() - static_cast<std::size_t>(nq)];
        scope.push_back(v);
        // Split atoms between a quantifier-free side conjunct and the body.
        const int side = atoms > 1 && coin(0.4) ? static_cast<int>(uniform(1, atoms - 1)) : 0;
        Formula body = formula_rec(scope, bound_names, nq - 1, atoms - side, cbound);
        if (!is_free(body, v)) {
            body = mk_and(body, atom(std::vector<std::string>{v}, cbound));
        }
        Formula q = coin() ? mk_exists(v, body) : mk_forall(v, body);
        if (side > 0) {
            scope.pop_back();
            Formula s = boolean(scope, side, cbound);
            q = coin() ? mk_and(q, s) : mk_or(q, s);
        }
        return q;
    }

    std::mt19937_64 m_rng;
};

} // namespace tame

#endif // TAME_RANDOM_HPP
