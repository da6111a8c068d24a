#include "mexq/series.hpp"

#include <algorithm>
#include <sstream>

#include "kernels.hpp"
#include "mexq/errors.hpp"

namespace mexq {

namespace {

using detail::ExactRing;
using detail::ModRing;

std::size_t expected_length(std::int64_t offset, std::int64_t prec)
{
    return prec >= offset ? static_cast<std::size_t>(prec - offset + 1) : 0;
}

void check_shape(std::int64_t offset, std::int64_t prec, std::size_t len)
{
    if (offset < 0)
        throw InvalidArgument("negative offset " + std::to_string(offset));
    if (len != expected_length(offset, prec))
        throw InvalidArgument("coefficient count " + std::to_string(len) + " does not match offset "
                              + std::to_string(offset) + " and prec " + std::to_string(prec));
}

// Uniform access to both series types for the generic arithmetic below.
ExactRing ring_of(const QSeries&) { return {}; }
ModRing ring_of(const ModQSeries& a) { return {a.modulus()}; }

QSeries make_like(const QSeries&, std::int64_t offset, std::int64_t prec, std::vector<mpz_class> c)
{
    return QSeries(offset, prec, std::move(c));
}
ModQSeries make_like(const ModQSeries& proto, std::int64_t offset, std::int64_t prec,
                     std::vector<std::uint64_t> c)
{
    return ModQSeries(offset, prec, proto.modulus(), std::move(c));
}

void check_same_modulus(const QSeries&, const QSeries&) {}
void check_same_modulus(const ModQSeries& a, const ModQSeries& b)
{
    if (a.modulus() != b.modulus())
        throw BadModulus("operands have moduli " + std::to_string(a.modulus()) + " and "
                         + std::to_string(b.modulus()));
}

template <class S, class Op>
S combine(const S& a, const S& b, Op op)
{
    check_same_modulus(a, b);
    const auto ring = ring_of(a);
    const std::int64_t off = std::min(a.offset(), b.offset());
    const std::int64_t prec = std::min(a.prec(), b.prec());
    using V = std::decay_t<decltype(a.coeffs()[0])>;
    std::vector<V> c(expected_length(off, prec), ring.zero());
    for (std::int64_t n = off; n <= prec; ++n)
        c[static_cast<std::size_t>(n - off)] = op(ring, a.value_at(n), b.value_at(n));
    return make_like(a, off, prec, std::move(c));
}

template <class S>
S multiply(const S& a, const S& b)
{
    check_same_modulus(a, b);
    const auto ring = ring_of(a);
    const std::int64_t off = a.offset() + b.offset();
    const std::int64_t prec = std::min(a.prec(), b.prec());
    const auto len = static_cast<std::int64_t>(expected_length(off, prec));
    return make_like(a, off, prec, detail::convolve(a.coeffs(), b.coeffs(), len, ring));
}

template <class S>
S divide(const S& num, const S& den)
{
    check_same_modulus(num, den);
    const auto ring = ring_of(den);
    if (den.offset() != 0)
        throw NonUnitLeadingCoefficient("divisor has offset " + std::to_string(den.offset()));
    if (den.empty())
        return make_like(num, num.offset(), std::min(num.prec(), den.prec()), {});
    const auto inv0 = ring.unit_inverse(den.coeffs()[0]);
    if (!inv0)
        throw NonUnitLeadingCoefficient("constant term is not a unit");
    const std::int64_t prec = std::min(num.prec(), den.prec());
    const auto len = static_cast<std::int64_t>(expected_length(num.offset(), prec));
    return make_like(num, num.offset(), prec, detail::triangular_divide(num.coeffs(), den.coeffs(), *inv0, len, ring));
}

template <class S>
S power(const S& a, std::int64_t e, S one)
{
    if (e < 0)
        return power(series_inverse(a), -e, std::move(one));
    S result = std::move(one);
    S base = a;
    bool first = true;
    while (e > 0) {
        if (e & 1) {
            result = first ? base : multiply(result, base);
            first = false;
        }
        e >>= 1;
        if (e > 0)
            base = multiply(base, base);
    }
    return result;
}

template <class S>
std::string render(const S& a, std::string_view suffix)
{
    std::ostringstream os;
    bool first = true;
    for (std::int64_t n = a.offset(); n <= a.prec(); ++n) {
        const auto& c = a.coeffs()[static_cast<std::size_t>(n - a.offset())];
        mpz_class v(c);
        if (sgn(v) == 0)
            continue;
        const bool neg = sgn(v) < 0;
        if (neg)
            v = -v;
        if (first)
            os << (neg ? "-" : "");
        else
            os << (neg ? " - " : " + ");
        first = false;
        if (n == 0) {
            os << v.get_str();
        } else {
            if (v != 1)
                os << v.get_str() << "*";
            os << "q";
            if (n != 1)
                os << "^" << n;
        }
    }
    if (first)
        os << "0";
    os << " + O(q^" << (a.prec() + 1) << ")" << suffix;
    return os.str();
}

} // namespace

// ---- QSeries ---------------------------------------------------------------

QSeries::QSeries(std::int64_t offset, std::int64_t prec, std::vector<mpz_class> coeffs)
    : offset_(offset), prec_(prec), coeffs_(std::move(coeffs))
{
    check_shape(offset_, prec_, coeffs_.size());
}

QSeries QSeries::zero(std::int64_t prec)
{
    return QSeries(0, prec, std::vector<mpz_class>(expected_length(0, prec)));
}

QSeries QSeries::one(std::int64_t prec)
{
    auto z = zero(prec);
    if (!z.coeffs_.empty())
        z.coeffs_[0] = 1;
    return z;
}

QSeries QSeries::polynomial(std::vector<mpz_class> coeffs, std::int64_t prec)
{
    coeffs.resize(expected_length(0, prec));
    return QSeries(0, prec, std::move(coeffs));
}

const mpz_class& QSeries::coefficient(std::int64_t n) const
{
    if (n > prec_ || n < offset_)
        throw OutOfPrecision("exponent " + std::to_string(n) + " outside [" + std::to_string(offset_) + ", "
                             + std::to_string(prec_) + "]");
    return coeffs_[static_cast<std::size_t>(n - offset_)];
}

mpz_class QSeries::value_at(std::int64_t n) const
{
    if (n > prec_)
        throw OutOfPrecision("exponent " + std::to_string(n) + " beyond prec " + std::to_string(prec_));
    if (n < offset_)
        return 0;
    return coeffs_[static_cast<std::size_t>(n - offset_)];
}

std::size_t QSeries::nonzero_count() const
{
    return static_cast<std::size_t>(
        std::count_if(coeffs_.begin(), coeffs_.end(), [](const mpz_class& c) { return sgn(c) != 0; }));
}

bool QSeries::is_zero() const { return nonzero_count() == 0; }

QSeries QSeries::truncated(std::int64_t prec) const
{
    if (prec > prec_)
        throw InvalidArgument("cannot extend prec " + std::to_string(prec_) + " to " + std::to_string(prec));
    std::vector<mpz_class> c(coeffs_.begin(), coeffs_.begin() + static_cast<std::ptrdiff_t>(expected_length(offset_, prec)));
    return QSeries(offset_, prec, std::move(c));
}

QSeries QSeries::shifted(std::int64_t k) const
{
    if (k < 0)
        throw InvalidArgument("negative shift");
    return QSeries(offset_ + k, prec_ + k, coeffs_);
}

QSeries QSeries::dilated(std::int64_t k) const
{
    if (k < 1)
        throw InvalidArgument("dilation factor must be >= 1");
    const std::int64_t prec = prec_ < 0 ? prec_ : k * prec_ + (k - 1);
    std::vector<mpz_class> c(expected_length(k * offset_, prec));
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
        c[i * static_cast<std::size_t>(k)] = coeffs_[i];
    return QSeries(k * offset_, prec, std::move(c));
}

QSeries QSeries::normalized() const
{
    std::size_t lead = 0;
    while (lead < coeffs_.size() && sgn(coeffs_[lead]) == 0)
        ++lead;
    if (lead == coeffs_.size())
        return QSeries(prec_ + 1 > offset_ ? prec_ + 1 : offset_, prec_, {});
    return QSeries(offset_ + static_cast<std::int64_t>(lead), prec_,
                   std::vector<mpz_class>(coeffs_.begin() + static_cast<std::ptrdiff_t>(lead), coeffs_.end()));
}

bool operator==(const QSeries& a, const QSeries& b)
{
    if (a.prec_ != b.prec_)
        return false;
    const std::int64_t lo = std::min(a.offset_, b.offset_);
    for (std::int64_t n = lo; n <= a.prec_; ++n)
        if (a.value_at(n) != b.value_at(n))
            return false;
    return true;
}

// ---- ModQSeries ------------------------------------------------------------

ModQSeries::ModQSeries(std::int64_t offset, std::int64_t prec, std::uint64_t modulus,
                       std::vector<std::uint64_t> residues)
    : offset_(offset), prec_(prec), modulus_(modulus), coeffs_(std::move(residues))
{
    if (modulus_ < 2 || modulus_ > static_cast<std::uint64_t>(INT64_MAX))
        throw BadModulus("modulus " + std::to_string(modulus_) + " outside [2, 2^63)");
    check_shape(offset_, prec_, coeffs_.size());
    for (auto c : coeffs_)
        if (c >= modulus_)
            throw InvalidArgument("residue " + std::to_string(c) + " not reduced mod " + std::to_string(modulus_));
}

ModQSeries ModQSeries::zero(std::int64_t prec, std::uint64_t modulus)
{
    return ModQSeries(0, prec, modulus, std::vector<std::uint64_t>(expected_length(0, prec), 0));
}

ModQSeries ModQSeries::one(std::int64_t prec, std::uint64_t modulus)
{
    auto z = zero(prec, modulus);
    if (!z.coeffs_.empty())
        z.coeffs_[0] = 1;
    return z;
}

std::uint64_t ModQSeries::coefficient(std::int64_t n) const
{
    if (n > prec_ || n < offset_)
        throw OutOfPrecision("exponent " + std::to_string(n) + " outside [" + std::to_string(offset_) + ", "
                             + std::to_string(prec_) + "]");
    return coeffs_[static_cast<std::size_t>(n - offset_)];
}

std::uint64_t ModQSeries::value_at(std::int64_t n) const
{
    if (n > prec_)
        throw OutOfPrecision("exponent " + std::to_string(n) + " beyond prec " + std::to_string(prec_));
    if (n < offset_)
        return 0;
    return coeffs_[static_cast<std::size_t>(n - offset_)];
}

std::size_t ModQSeries::nonzero_count() const
{
    return static_cast<std::size_t>(std::count_if(coeffs_.begin(), coeffs_.end(), [](auto c) { return c != 0; }));
}

ModQSeries ModQSeries::truncated(std::int64_t prec) const
{
    if (prec > prec_)
        throw InvalidArgument("cannot extend prec " + std::to_string(prec_) + " to " + std::to_string(prec));
    std::vector<std::uint64_t> c(coeffs_.begin(),
                                 coeffs_.begin() + static_cast<std::ptrdiff_t>(expected_length(offset_, prec)));
    return ModQSeries(offset_, prec, modulus_, std::move(c));
}

ModQSeries ModQSeries::shifted(std::int64_t k) const
{
    if (k < 0)
        throw InvalidArgument("negative shift");
    return ModQSeries(offset_ + k, prec_ + k, modulus_, coeffs_);
}

bool operator==(const ModQSeries& a, const ModQSeries& b)
{
    if (a.prec_ != b.prec_ || a.modulus_ != b.modulus_)
        return false;
    const std::int64_t lo = std::min(a.offset_, b.offset_);
    for (std::int64_t n = lo; n <= a.prec_; ++n)
        if (a.value_at(n) != b.value_at(n))
            return false;
    return true;
}

// ---- arithmetic ------------------------------------------------------------

QSeries series_add(const QSeries& a, const QSeries& b)
{
    return combine(a, b, [](const ExactRing& r, const mpz_class& x, const mpz_class& y) { return r.add(x, y); });
}

QSeries series_sub(const QSeries& a, const QSeries& b)
{
    return combine(a, b, [](const ExactRing& r, const mpz_class& x, const mpz_class& y) { return r.sub(x, y); });
}

QSeries series_neg(const QSeries& a) { return series_scale(a, -1); }

QSeries series_scale(const QSeries& a, const mpz_class& c)
{
    std::vector<mpz_class> out(a.coeffs().begin(), a.coeffs().end());
    for (auto& v : out)
        v *= c;
    return QSeries(a.offset(), a.prec(), std::move(out));
}

QSeries series_mul(const QSeries& a, const QSeries& b) { return multiply(a, b); }

QSeries series_pow(const QSeries& a, std::int64_t e)
{
    auto one = QSeries::one(a.prec());
    return power(a, e, one);
}

QSeries series_inverse(const QSeries& a) { return divide(QSeries::one(a.prec()), a); }

QSeries series_divide(const QSeries& num, const QSeries& den) { return divide(num, den); }

ModQSeries series_add(const ModQSeries& a, const ModQSeries& b)
{
    return combine(a, b, [](const ModRing& r, std::uint64_t x, std::uint64_t y) { return r.add(x, y); });
}

ModQSeries series_sub(const ModQSeries& a, const ModQSeries& b)
{
    return combine(a, b, [](const ModRing& r, std::uint64_t x, std::uint64_t y) { return r.sub(x, y); });
}

ModQSeries series_mul(const ModQSeries& a, const ModQSeries& b) { return multiply(a, b); }

ModQSeries series_pow(const ModQSeries& a, std::int64_t e)
{
    return power(a, e, ModQSeries::one(a.prec(), a.modulus()));
}

ModQSeries series_inverse(const ModQSeries& a) { return divide(ModQSeries::one(a.prec(), a.modulus()), a); }

ModQSeries series_divide(const ModQSeries& num, const ModQSeries& den) { return divide(num, den); }

ModQSeries series_reduce_mod(const QSeries& a, std::int64_t m)
{
    if (m < 2)
        throw BadModulus("modulus " + std::to_string(m) + " < 2");
    const mpz_class mm(static_cast<long>(m));
    std::vector<std::uint64_t> c;
    c.reserve(a.coeffs().size());
    mpz_class r;
    for (const auto& v : a.coeffs()) {
        mpz_fdiv_r(r.get_mpz_t(), v.get_mpz_t(), mm.get_mpz_t());
        c.push_back(static_cast<std::uint64_t>(r.get_ui()));
    }
    return ModQSeries(a.offset(), a.prec(), static_cast<std::uint64_t>(m), std::move(c));
}

ModQSeries series_reduce_mod(const ModQSeries& a, std::int64_t m)
{
    if (m < 2 || a.modulus() % static_cast<std::uint64_t>(m) != 0)
        throw BadModulus("modulus " + std::to_string(m) + " does not divide " + std::to_string(a.modulus()));
    std::vector<std::uint64_t> c(a.coeffs().begin(), a.coeffs().end());
    for (auto& v : c)
        v %= static_cast<std::uint64_t>(m);
    return ModQSeries(a.offset(), a.prec(), static_cast<std::uint64_t>(m), std::move(c));
}

// ---- serialization ---------------------------------------------------------

nlohmann::json to_json(const QSeries& a)
{
    nlohmann::json coeffs = nlohmann::json::array();
    for (const auto& c : a.coeffs())
        coeffs.push_back(c.get_str());
    return {{"offset", a.offset()}, {"prec", a.prec()}, {"coeffs", std::move(coeffs)}};
}

nlohmann::json to_json(const ModQSeries& a)
{
    nlohmann::json coeffs = nlohmann::json::array();
    for (auto c : a.coeffs())
        coeffs.push_back(std::to_string(c));
    return {{"offset", a.offset()}, {"prec", a.prec()}, {"modulus", a.modulus()}, {"coeffs", std::move(coeffs)}};
}

namespace {

std::vector<mpz_class> parse_coeffs(const nlohmann::json& j)
{
    std::vector<mpz_class> out;
    for (const auto& c : j.at("coeffs")) {
        mpz_class v;
        if (!c.is_string() || v.set_str(c.get<std::string>(), 10) != 0)
            throw InvalidArgument("coefficient is not a decimal string: " + c.dump());
        out.push_back(std::move(v));
    }
    return out;
}

} // namespace

QSeries series_from_json(const nlohmann::json& j)
{
    try {
        return QSeries(j.at("offset").get<std::int64_t>(), j.at("prec").get<std::int64_t>(), parse_coeffs(j));
    } catch (const nlohmann::json::exception& e) {
        throw InvalidArgument(std::string("malformed series JSON: ") + e.what());
    }
}

ModQSeries mod_series_from_json(const nlohmann::json& j)
{
    try {
        const auto m = j.at("modulus").get<std::uint64_t>();
        std::vector<std::uint64_t> c;
        for (const auto& v : parse_coeffs(j)) {
            if (sgn(v) < 0 || !v.fits_ulong_p())
                throw InvalidArgument("residue out of range: " + v.get_str());
            c.push_back(v.get_ui());
        }
        return ModQSeries(j.at("offset").get<std::int64_t>(), j.at("prec").get<std::int64_t>(), m, std::move(c));
    } catch (const nlohmann::json::exception& e) {
        throw InvalidArgument(std::string("malformed series JSON: ") + e.what());
    }
}

std::string to_string(const QSeries& a) { return render(a, ""); }

std::string to_string(const ModQSeries& a)
{
    return render(a, " (mod " + std::to_string(a.modulus()) + ")");
}

} // namespace mexq
