#include "hyperaccel/rational.hpp"
#include "hyperaccel/errors.hpp"

namespace hyperaccel {

Rat rat_pow(const Rat& x, long e) {
    if (e == 0) return Rat(1);
    bool inv = e < 0;
    unsigned long ue = static_cast<unsigned long>(inv ? -e : e);
    if (inv && x == 0) throw DivisionByZero();
    Rat r;
    mpz_pow_ui(r.get_num_mpz_t(), x.get_num().get_mpz_t(), ue);
    mpz_pow_ui(r.get_den_mpz_t(), x.get_den().get_mpz_t(), ue);
    if (inv) {
        Rat q;
        mpq_inv(q.get_mpq_t(), r.get_mpq_t());
        return q;
    }
    r.canonicalize(); // sign lives in the numerator already, this is cheap
    return r;
}

std::string rat_string(const Rat& x) {
    if (x.get_den() == 1) return x.get_num().get_str();
    return x.get_num().get_str() + "/" + x.get_den().get_str();
}

Int scaled_round(const Rat& x, long scale) {
    Int num = x.get_num() * pow10z(scale);
    Int den = x.get_den();
    Int q, r;
    mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    // round half away from zero
    Int twice = 2 * abs(r);
    if (twice >= den) q += (sgn(num) < 0 ? -1 : 1);
    return q;
}

std::string decimal_string(const Rat& x, long digits) {
    Int m = scaled_round(x, digits);
    bool neg = m < 0;
    std::string ds = Int(abs(m)).get_str();
    if ((long)ds.size() <= digits) ds.insert(0, digits + 1 - ds.size(), '0');
    std::string out = ds.substr(0, ds.size() - digits);
    if (digits > 0) out += "." + ds.substr(ds.size() - digits);
    return neg ? "-" + out : out;
}

} // namespace hyperaccel
