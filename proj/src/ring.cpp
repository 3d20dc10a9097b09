#include "pcx/ring.hpp"

#include <algorithm>
#include <cctype>
#include <set>

#include "pcx/errors.hpp"

namespace pcx {

namespace {

bool is_identifier(const std::string& s)
{
    if (s.empty())
        return false;
    if (!std::isalpha(static_cast<unsigned char>(s[0])) && s[0] != '_')
        return false;
    for (char c : s)
        if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_')
            return false;
    return s != "eps";
}

bool is_prime(std::int64_t p)
{
    if (p < 2)
        return false;
    for (std::int64_t d = 2; d * d <= p; ++d)
        if (p % d == 0)
            return false;
    return true;
}

void check_vars(const std::vector<std::string>& vars)
{
    if (vars.empty())
        fail(errc::invalid_ring, "variable list must be nonempty");
    std::set<std::string> seen;
    for (const auto& v : vars) {
        if (!is_identifier(v))
            fail(errc::invalid_ring, "invalid variable name '" + v + "'");
        if (!seen.insert(v).second)
            fail(errc::invalid_ring, "duplicate variable name '" + v + "'");
    }
}

void check_field_base(const RingPtr& base, const char* what)
{
    if (!base)
        fail(errc::invalid_ring, std::string(what) + " requires a base ring");
    if (!base->is_field())
        fail(errc::invalid_ring, std::string(what) + " base must be a field kind");
}

} // namespace

RingPtr Ring::rationals()
{
    static const RingPtr qq = [] {
        auto r = std::shared_ptr<Ring>(new Ring());
        r->kind_ = RingKind::Rationals;
        return RingPtr(r);
    }();
    return qq;
}

RingPtr Ring::prime_field(std::int64_t p)
{
    if (!is_prime(p))
        fail(errc::invalid_ring, "PRIME_FIELD modulus " + std::to_string(p) + " is not prime");
    if (p >= (std::int64_t(1) << 31))
        fail(errc::invalid_ring, "PRIME_FIELD modulus too large (must be < 2^31)");
    auto r = std::shared_ptr<Ring>(new Ring());
    r->kind_ = RingKind::PrimeField;
    r->p_ = p;
    return r;
}

RingPtr Ring::polynomial(RingPtr base, std::vector<std::string> vars)
{
    check_field_base(base, "POLYNOMIAL");
    check_vars(vars);
    auto r = std::shared_ptr<Ring>(new Ring());
    r->kind_ = RingKind::Polynomial;
    r->base_ = std::move(base);
    r->vars_ = std::move(vars);
    return r;
}

RingPtr Ring::rational_functions(RingPtr base, std::vector<std::string> vars)
{
    check_field_base(base, "RATIONAL_FUNCTIONS");
    check_vars(vars);
    auto r = std::shared_ptr<Ring>(new Ring());
    r->kind_ = RingKind::RationalFunctions;
    r->base_ = std::move(base);
    r->vars_ = std::move(vars);
    return r;
}

RingPtr Ring::dual_numbers(RingPtr base)
{
    check_field_base(base, "DUAL_NUMBERS");
    auto r = std::shared_ptr<Ring>(new Ring());
    r->kind_ = RingKind::DualNumbers;
    r->base_ = std::move(base);
    return r;
}

bool Ring::is_field() const
{
    return kind_ == RingKind::Rationals || kind_ == RingKind::PrimeField ||
           kind_ == RingKind::RationalFunctions;
}

std::int64_t Ring::prime() const
{
    if (kind_ != RingKind::PrimeField)
        fail(errc::internal, "prime() on a non-prime-field ring");
    return p_;
}

std::int64_t Ring::characteristic() const
{
    switch (kind_) {
        case RingKind::Rationals: return 0;
        case RingKind::PrimeField: return p_;
        default: return base_->characteristic();
    }
}

const RingPtr& Ring::base() const
{
    if (!base_)
        fail(errc::internal, "base() on a ring without a base");
    return base_;
}

const std::vector<std::string>& Ring::vars() const
{
    return vars_;
}

std::size_t Ring::var_count() const
{
    return vars_.size();
}

std::size_t Ring::var_index(const std::string& name) const
{
    auto it = std::find(vars_.begin(), vars_.end(), name);
    if (it == vars_.end())
        fail(errc::missing_variable, "variable '" + name + "' not in " + description());
    return static_cast<std::size_t>(it - vars_.begin());
}

std::string Ring::description() const
{
    auto join = [](const std::vector<std::string>& vs) {
        std::string out;
        for (std::size_t i = 0; i < vs.size(); ++i) {
            if (i)
                out += ",";
            out += vs[i];
        }
        return out;
    };
    switch (kind_) {
        case RingKind::Rationals: return "QQ";
        case RingKind::PrimeField: return "GF(" + std::to_string(p_) + ")";
        case RingKind::Polynomial: return base_->description() + "[" + join(vars_) + "]";
        case RingKind::RationalFunctions: return base_->description() + "(" + join(vars_) + ")";
        case RingKind::DualNumbers: return base_->description() + "[eps]/(eps^2)";
    }
    return "?";
}

bool same_ring(const Ring& a, const Ring& b)
{
    if (&a == &b)
        return true;
    if (a.kind() != b.kind())
        return false;
    switch (a.kind()) {
        case RingKind::Rationals: return true;
        case RingKind::PrimeField: return a.prime() == b.prime();
        case RingKind::Polynomial:
        case RingKind::RationalFunctions:
            return a.vars() == b.vars() && same_ring(a.base(), b.base());
        case RingKind::DualNumbers: return same_ring(a.base(), b.base());
    }
    return false;
}

bool same_ring(const RingPtr& a, const RingPtr& b)
{
    if (a == b)
        return true;
    if (!a || !b)
        return false;
    return same_ring(*a, *b);
}

} // namespace pcx
