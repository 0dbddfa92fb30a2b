#pragma once

#include <algorithm>
#include <cstdint>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace expalg {

/// Variable classes, ordered: power variables come first in the canonical
/// variable order, then generic field variables, then series variables.
enum class VarKind { power, generic, series };

inline int kind_rank(VarKind k) { return static_cast<int>(k); }

struct Variable {
    std::string name;
    VarKind kind;

    friend bool operator==(const Variable&, const Variable&) = default;
};

/// Exponent vector over an alphabet; entry i is the exponent of variable i.
using Monomial = std::vector<std::uint32_t>;

inline std::uint64_t total_degree(const Monomial& m) {
    std::uint64_t d = 0;
    for (auto e : m) d += e;
    return d;
}

/// Graded lexicographic order. Total degree first; ties broken by the
/// exponent of the most significant variable, which is the highest index
/// (the canonical order puts power < generic < series).
inline bool grlex_less(const Monomial& a, const Monomial& b) {
    std::uint64_t da = total_degree(a), db = total_degree(b);
    if (da != db) return da < db;
    size_t n = std::max(a.size(), b.size());
    for (size_t i = n; i-- > 0;) {
        std::uint32_t ea = i < a.size() ? a[i] : 0;
        std::uint32_t eb = i < b.size() ? b[i] : 0;
        if (ea != eb) return ea < eb;
    }
    return false;
}

struct GrlexLess {
    bool operator()(const Monomial& a, const Monomial& b) const { return grlex_less(a, b); }
};

/// Immutable ordered variable table shared by all values built over it.
/// Canonical order is (kind, name), so merges and declaration order do not
/// affect monomial comparisons.
class Alphabet;
using AlphabetPtr = std::shared_ptr<const Alphabet>;

class Alphabet {
  public:
    static AlphabetPtr make(std::vector<Variable> vars) {
        std::sort(vars.begin(), vars.end(), [](const Variable& a, const Variable& b) {
            if (a.kind != b.kind) return kind_rank(a.kind) < kind_rank(b.kind);
            return a.name < b.name;
        });
        for (size_t i = 1; i < vars.size(); ++i) {
            if (vars[i].name == vars[i - 1].name) {
                if (vars[i].kind != vars[i - 1].kind)
                    throw std::invalid_argument("variable '" + vars[i].name +
                                                "' declared with two kinds");
                vars.erase(vars.begin() + static_cast<std::ptrdiff_t>(i));
                --i;
            }
        }
        // cross-kind duplicate with non-adjacent sort positions
        for (size_t i = 0; i < vars.size(); ++i)
            for (size_t j = i + 1; j < vars.size(); ++j)
                if (vars[i].name == vars[j].name)
                    throw std::invalid_argument("variable '" + vars[i].name +
                                                "' declared with two kinds");
        return AlphabetPtr(new Alphabet(std::move(vars)));
    }

    static AlphabetPtr empty() {
        static AlphabetPtr e = make({});
        return e;
    }

    static AlphabetPtr merge(const AlphabetPtr& a, const AlphabetPtr& b) {
        if (!a || a->size() == 0) return b ? b : empty();
        if (!b || b->size() == 0) return a;
        if (a == b || *a == *b) return a;
        std::vector<Variable> vars = a->vars_;
        vars.insert(vars.end(), b->vars_.begin(), b->vars_.end());
        return make(std::move(vars));
    }

    size_t size() const { return vars_.size(); }
    const Variable& var(size_t i) const { return vars_.at(i); }
    const std::vector<Variable>& vars() const { return vars_; }

    std::optional<size_t> index_of(std::string_view name) const {
        for (size_t i = 0; i < vars_.size(); ++i)
            if (vars_[i].name == name) return i;
        return std::nullopt;
    }

    std::vector<size_t> indices_of(VarKind k) const {
        std::vector<size_t> out;
        for (size_t i = 0; i < vars_.size(); ++i)
            if (vars_[i].kind == k) out.push_back(i);
        return out;
    }

    bool contains(std::string_view name) const { return index_of(name).has_value(); }

    friend bool operator==(const Alphabet& a, const Alphabet& b) { return a.vars_ == b.vars_; }

  private:
    explicit Alphabet(std::vector<Variable> vars) : vars_(std::move(vars)) {}
    std::vector<Variable> vars_;
};

/// Remaps a monomial over `from` into the (super-)alphabet `to`.
inline Monomial remap_monomial(const Monomial& m, const Alphabet& from, const Alphabet& to) {
    Monomial out(to.size(), 0);
    for (size_t i = 0; i < m.size() && i < from.size(); ++i) {
        if (m[i] == 0) continue;
        auto idx = to.index_of(from.var(i).name);
        if (!idx) throw std::invalid_argument("monomial remap: variable missing in target");
        out[*idx] = m[i];
    }
    return out;
}

}  // namespace expalg
