#include "dsarr/rational.hpp"

#include "dsarr/errors.hpp"

namespace dsarr {

Rational rat_parse(const std::string& text) {
    mpq_class q;
    if (q.set_str(text, 10) != 0) {
        throw InputError("cannot parse rational: '" + text + "'");
    }
    if (q.get_den() == 0) {
        throw InputError("zero denominator in rational: '" + text + "'");
    }
    q.canonicalize();
    return q;
}

std::string rat_str(const Rational& q) {
    return q.get_str();
}

namespace {

Json integer_to_json(const mpz_class& z) {
    if (z.fits_slong_p()) {
        return Json(static_cast<std::int64_t>(z.get_si()));
    }
    return Json(z.get_str());
}

mpz_class integer_from_json(const Json& j) {
    if (j.is_number_integer()) {
        return mpz_class(static_cast<long>(j.get<std::int64_t>()));
    }
    if (j.is_string()) {
        mpz_class z;
        if (z.set_str(j.get<std::string>(), 10) != 0) {
            throw InputError("cannot parse integer: '" + j.get<std::string>() + "'");
        }
        return z;
    }
    throw InputError("expected integer or decimal string, got: " + j.dump());
}

}  // namespace

Json rat_to_json(const Rational& q) {
    return Json::array({integer_to_json(q.get_num()), integer_to_json(q.get_den())});
}

Rational rat_from_json(const Json& j) {
    if (!j.is_array() || j.size() != 2) {
        throw InputError("expected [numerator, denominator], got: " + j.dump());
    }
    mpz_class num = integer_from_json(j[0]);
    mpz_class den = integer_from_json(j[1]);
    if (den == 0) {
        throw InputError("zero denominator in rational: " + j.dump());
    }
    Rational q(num, den);
    q.canonicalize();
    return q;
}

double rat_to_double(const Rational& q) {
    return q.get_d();
}

}  // namespace dsarr
