#include "enclosure.hpp"

#include <algorithm>
#include <stdexcept>

namespace negcyc {

const char* const kPiDigits =
    "3141592653589793238462643383279502884197169399375105820974944592307816406286"
    "2089986280348253421170679821480865132823066470938446095505822317253594081284"
    "8111745028410270193852110555964462294895493038196442881097566593344612847564"
    "8233786783165271201909145648566923460348610454326648213393607260249141273724"
    "5870066063155881748815209209628292540917153643678925903600113305305488204665"
    "2138414695194151160943305727036575959195309218611738193261179310511854807446"
    "2379962749567351885752724891227938183011949129833673362440656643086021394946"
    "3952247371907021798609437027705392171762931767523846748184676694051320005681"
    "2714526356082778577134275778960917363717872146844090122495343014654958537105"
    "0792279689258923542019956112129021960864034418159813629774771309960518707211"
    "3499999983729780499510597317328160963185950244594553469083026425223082533446"
    "8503526193118817101000313783875288658753320838142061717766914730359825349042"
    "8755468731159562863882353787593751957781857780532171226806613001927876611195"
    "9092164201989380952572010654858632788659361533818279682303019520353018529689"
    "9577362259941389124972177528347913151557485724245415069595082953311686172785"
    "5889075098381754637464939319255060400927701671139009848824012858361603563707"
    "6601047101819429555961989467678374494482553797747268471040475346462080466842"
    "590694912";

const char* const kEDigits =
    "2718281828459045235360287471352662497757247093699959574966967627724076630353"
    "5475945713821785251664274274663919320030599218174135966290435729003342952605"
    "9563073813232862794349076323382988075319525101901157383418793070215408914993"
    "4884167509244761460668082264800168477411853742345442437107539077744992069551"
    "7027618386062613313845830007520449338265602976067371132007093287091274437470"
    "4723069697720931014169283681902551510865746377211125238978442505695369677078"
    "5449969967946864454905987931636889230098793127736178215424999229576351482208"
    "2698951936680331825288693984964651058209392398294887933203625094431173012381"
    "9706841614039701983767932068328237646480429531180232878250981945581530175671"
    "7361332069811250996181881593041690351598888519345807273866738589422879228499"
    "8920868058257492796104841984443634632449684875602336248270419786232090021609"
    "9023530436994184914631409343173814364054625315209618369088870701676839642437"
    "8140592714563549061303107208510383750510115747704171898610687396965521267154"
    "6889570350354021234078498193343210681701210056278802351930332247450158539047"
    "3041995777709350366041699732972508868769664035557071622684471625607988265178"
    "7134195124665201030592123667719432527867539855894489697096409754591856956380"
    "2363701621120477427228364896134225164450781824423529486363721417402388934412"
    "479635743";

namespace {

Interval constant_interval(const char* digits, unsigned prec) {
    static_assert(sizeof(mp_bitcnt_t) >= 4);
    BigInt t;
    if (mpz_set_str(t.get_mpz_t(), digits, 10) != 0)
        throw std::logic_error("bad constant digit string");
    BigInt scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, kConstantFracDigits);
    return Interval(Dyadic::from_ratio(t, scale, prec, Round::down),
                    Dyadic::from_ratio(t + 1, scale, prec, Round::up));
}

}  // namespace

Interval pi_interval(unsigned prec) { return constant_interval(kPiDigits, prec); }
Interval e_interval(unsigned prec) { return constant_interval(kEDigits, prec); }

Interval Interval::from_rational(const Rational& q, unsigned prec) {
    return Interval(Dyadic::from_rational(q, prec, Round::down),
                    Dyadic::from_rational(q, prec, Round::up));
}

Interval Interval::from_ratio(const BigInt& num, const BigInt& den, unsigned prec) {
    return Interval(Dyadic::from_ratio(num, den, prec, Round::down),
                    Dyadic::from_ratio(num, den, prec, Round::up));
}

Interval Interval::add(const Interval& a, const Interval& b, unsigned prec) {
    return Interval(Dyadic::add(a.lo_, b.lo_, prec, Round::down),
                    Dyadic::add(a.hi_, b.hi_, prec, Round::up));
}

Interval Interval::sub(const Interval& a, const Interval& b, unsigned prec) {
    return Interval(Dyadic::sub(a.lo_, b.hi_, prec, Round::down),
                    Dyadic::sub(a.hi_, b.lo_, prec, Round::up));
}

Interval Interval::mul(const Interval& a, const Interval& b, unsigned prec) {
    // all sign cases via endpoint candidates
    const Dyadic* as[2] = {&a.lo_, &a.hi_};
    const Dyadic* bs[2] = {&b.lo_, &b.hi_};
    Dyadic lo, hi;
    bool first = true;
    for (auto* x : as)
        for (auto* y : bs) {
            Dyadic d = Dyadic::mul(*x, *y, prec, Round::down);
            Dyadic u = Dyadic::mul(*x, *y, prec, Round::up);
            if (first || Dyadic::cmp(d, lo) < 0) lo = d;
            if (first || Dyadic::cmp(u, hi) > 0) hi = u;
            first = false;
        }
    return Interval(lo, hi);
}

Interval Interval::div(const Interval& a, const Interval& b, unsigned prec) {
    if (b.lo_.sign() <= 0 && b.hi_.sign() >= 0)
        throw std::invalid_argument("interval division by an interval containing zero");
    const Dyadic* as[2] = {&a.lo_, &a.hi_};
    const Dyadic* bs[2] = {&b.lo_, &b.hi_};
    Dyadic lo, hi;
    bool first = true;
    for (auto* x : as)
        for (auto* y : bs) {
            Dyadic d = Dyadic::div(*x, *y, prec, Round::down);
            Dyadic u = Dyadic::div(*x, *y, prec, Round::up);
            if (first || Dyadic::cmp(d, lo) < 0) lo = d;
            if (first || Dyadic::cmp(u, hi) > 0) hi = u;
            first = false;
        }
    return Interval(lo, hi);
}

Interval Interval::sqrt(const Interval& a, unsigned prec) {
    if (a.lo_.sign() < 0) throw std::invalid_argument("sqrt of an interval reaching below zero");
    return Interval(Dyadic::sqrt(a.lo_, prec, Round::down), Dyadic::sqrt(a.hi_, prec, Round::up));
}

Interval Interval::pow_ui(const Interval& a, uint64_t k, unsigned prec) {
    if (a.lo_.sign() < 0) throw std::invalid_argument("pow_ui of an interval reaching below zero");
    return Interval(Dyadic::pow_ui(a.lo_, k, prec, Round::down),
                    Dyadic::pow_ui(a.hi_, k, prec, Round::up));
}

int Interval::compare(const Interval& a, const Interval& b) {
    if (Dyadic::cmp(a.hi_, b.lo_) < 0) return -1;
    if (Dyadic::cmp(a.lo_, b.hi_) > 0) return 1;
    return 0;
}

int Interval::compare_to(const Rational& q) const {
    if (Dyadic::cmp(hi_, q) < 0) return -1;
    if (Dyadic::cmp(lo_, q) > 0) return 1;
    return 0;
}

}  // namespace negcyc
