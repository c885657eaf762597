#include "hyperaccel/catalog.hpp"

// The embedded dataset.  Certificates for the first five families are
// transcribed from the published recurrences; the remaining four were found
// by the undetermined-coefficients search (tools/mkcatalog discover) and
// frozen here.  Entry shift/scale normalizations come from mkcatalog probe.

namespace hyperaccel {

const char* builtin_catalog_text() {
    return R"CATALOG(hyperaccel-catalog v1

family nknk
section (a)_k (b)_k / (n)_k^2
poch a 1
poch b 1
poch n -2
r 1
R -n^2*(-2*n*(a+b-k+1)+a*b-a*k+a-b*k+b+3*n^2)
p1 -(a-n)^2*(b-n)^2
p2 n^2*(-1-a-b+2*n)*(-a-b+2*n)
end

family nk2nk
section (a)_k (b)_k / ((n)_k (2n)_k)
poch a 1
poch b 1
poch n -1
poch 2*n -1
r 1
R (2*n^2*(1+2*n)*((-1+b)*b*(-1+k)*k + (3*(-1+k)*k + b^2*(-2+5*k) + b*(2+k-6*k^2))*n + (-6+8*b^2+b*(6-28*k)+k*(4+9*k))*n^2 + (-4-38*b+39*k)*n^3 + 46*n^4 + a*(-k*(-1+b+b^2+k-2*b*k) + (2-b*(2+5*b)+k+13*b*k-6*k^2)*n + (6+27*b-28*k)*n^2 - 38*n^3) + a^2*(b^2+(-1+k)*k+(-2+5*k)*n+8*n^2-b*(k+5*n))))/(k+2*n)
p1 a^3*b^3 - 5*a^3*b^2*n + 8*a^3*b*n^2 - 4*a^3*n^3 - 5*a^2*b^3*n + 25*a^2*b^2*n^2 - 40*a^2*b*n^3 + 20*a^2*n^4 + 8*a*b^3*n^2 - 40*a*b^2*n^3 + 64*a*b*n^4 - 32*a*n^5 - 4*b^3*n^3 + 20*b^2*n^4 - 32*b*n^5 + 16*n^6 - a^3*b^2 + 3*a^3*b*n - 2*a^3*n^2 - a^2*b^3 + 10*a^2*b^2*n - 23*a^2*b*n^2 + 14*a^2*n^3 + 3*a*b^3*n - 23*a*b^2*n^2 + 48*a*b*n^3 - 28*a*n^4 - 2*b^3*n^2 + 14*b^2*n^3 - 28*b*n^4 + 16*n^5 + a^2*b^2 - 3*a^2*b*n + 2*a^2*n^2 - 3*a*b^2*n + 9*a*b*n^2 - 6*a*n^3 + 2*b^2*n^2 - 6*b*n^3 + 4*n^4
p2 -108*n^6 + 4*a^3*n^3 - 36*a^2*n^4 + 108*a*n^5 + 2*a^3*n^2 - 18*a^2*n^3 - 54*n^5 + 6*a^2*b*n^2 + 6*a*b^2*n^2 - 36*a*b*n^3 - 2*b*n^2 - 4*b*n^3 + 12*a*b^2*n^3 + 12*a^2*b*n^3 - 72*a*b*n^4 - 2*a*n^2 + 12*n^4 + 6*n^3 + 4*b^3*n^3 - 36*b^2*n^4 + 108*b*n^5 + 2*b^3*n^2 - 18*b^2*n^3 + 54*b*n^4 + 54*a*n^4 - 4*a*n^3
end

family nkank
section (a)_k (b)_k / ((n)_k (a+n)_k)
poch a 1
poch b 1
poch n -1
poch a+n -1
r 1
R -((a+n)*(n*(a+2*k+3*n-2)-b*(k+2*n-1)))
p1 -a^2*b+a^2*n+a*b^2-a*b*n-b^2*n+2*b*n^2-n^3
p2 a*b^2-4*a*b*n+a*b+4*a*n^2-2*a*n+b^2*n-4*b*n^2+b*n+4*n^3-2*n^2
end

family nka2nk
section (a)_k (b)_k / ((n)_k (a+2n)_k)
poch a 1
poch b 1
poch n -1
poch a+2*n -1
r 1
R ((a+2*n)*(1+a+2*n)*((-1+b)*b*(-1+k)*(a+k) + (2*a^2 + 3*(-1+k)*k + b^2*(-2+5*k) + a*(-3+b*(3+b-8*k)+5*k) + b*(2+k-6*k^2))*n + (-6+4*a^2+8*b^2+b*(6-28*k)+k*(4+9*k) + a*(2-16*b+15*k))*n^2 + (-4+31*a-38*b+39*k)*n^3 + 46*n^4))/(a+k+2*n)
p1 4*a^3*b*n - 4*a^3*n^2 - 8*a^2*b^2*n + 20*a^2*b*n^2 - 12*a^2*n^3 + 4*a*b^3*n - 12*a*b^2*n^2 + 8*a*b*n^3 - 4*b^3*n^2 + 20*b^2*n^3 - 32*b*n^4 + 16*n^5 + 2*a^3*b - 2*a^3*n - 4*a^2*b^2 + 14*a^2*b*n - 10*a^2*n^2 + 2*a*b^3 - 10*a*b^2*n + 12*a*b*n^2 - 4*a*n^3 - 2*b^3*n + 14*b^2*n^2 - 28*b*n^3 + 16*n^4 + 2*a^2*b - 2*a^2*n - 2*a*b^2 + 4*a*b*n - 2*a*n^2 + 2*b^2*n - 6*b*n^2 + 4*n^3
p2 -4*a*b*n - a^2*b - 27*a^2*n^3 - 108*n^5 + 27*a^2*b*n^2 - 36*a*b^2*n^2 + 108*a*b*n^3 - 4*b*n^2 - 18*b^2*n^2 + 54*b*n^3 - a*b + 2*b^3*n + 4*a*b^3*n - 9*a^2*b^2*n + 12*a*n^2 + 3*a*n + a*b^3 - 54*n^4 + 12*n^3 + 6*n^2 - 2*n*b + 27*a*b*n^2 - 9*a*b^2*n + 3*a^2*n + a^2*b^3 + 4*b^3*n^2 - 36*b^2*n^3 + 108*b*n^4 - 108*a*n^4 - 27*a*n^3
end

family altquarter
section (-1)^k (a)_k (b)_k / ((a+n+1)_k (b+n+1)_k)
poch a 1
poch b 1
poch a+n+1 -1
poch b+n+1 -1
power -1
r 2
R ((a+n+1)*(a+n+2)*(b+n+1)*(b+n+2)*(a*(2*b+2*k+3*n+3)+b*(2*k+3*n+3)+6*k*n+2*k*(k+3)+5*n^2+11*n+6))/((a+k+n+1)*(b+k+n+1))
p1 (1+n)*(2+n)*((a-b)^2-(2+n)^2)
p2 -4*(1+a+n)*(2+a+n)*(1+b+n)*(2+b+n)
end

entry rama-6n1
family nknk
assign 1/2 1/2 2
target 4 pi^-1
rate 1/4
upper 1/2 1/2 1/2
lower 1 1 1
summand 6*j + 1
start 0
shifted 1 4
provenance Ramanujan (1914)
end

entry guillera-3n2
family nknk
assign 1/2 1/2 3/2
target 1/4 pisq
rate 1/4
upper 1 1 1
lower 3/2 3/2 3/2
summand 3*j + 2
start 0
shifted 0 1/2
provenance Guillera (2008)
end

entry cz-ex84-6g
family nknk
assign 1/2 1 3/2
target 6 catalan
rate 1/4
upper 1 1
lower 5/4 7/4
summand (6*j + 5)/(2*j + 1)
start 0
shifted 0 1/3
provenance Chu and Zhang (2014), Example 84
end

entry nknk-2sqrt2pi
family nknk
assign 3/4 5/4 2
target 2 sqrt2 pi^-1
rate 1/4
upper -1/4 -1/4 1/4 1/4
lower 1/2 1 1 1
summand -48*j^2 + 1
start 0
end

entry nknk-3ln2
family nknk
assign 3/2 1 2
target 3 ln2
rate 1/4
upper 1/2 1/2
lower 5/4 7/4
summand (3*j + 2)/(j + 1)
start 0
end

entry chu-ex9
family nknk
assign 1/3 2/3 2
target 9/2 sqrt3 pi^-1
rate 1/4
upper 1/3 1/3 2/3 2/3
lower 1 1 1 3/2
summand 27*j^2 + 18*j + 2
start 0
provenance Chu (2011), Example 9
end

entry nknk-sqrt3half
family nknk
assign 1/3 2/3 3/2
target 1/2 sqrt3
rate 1/4
upper -1/6 -1/6 1/6 1/6
lower 1/2 1/2 1/2 1
summand -108*j^2 + 36*j + 1
start 0
end

entry chu-ex15
family nknk
assign 1/6 5/6 2
target 18 pi^-1
rate 1/4
upper 1/6 1/6 5/6 5/6
lower 1 1 1 3/2
summand 108*j^2 + 72*j + 5
start 0
provenance Chu (2011), Example 15
end

entry nknk-sqrt2half
family nknk
assign 1/4 3/4 3/2
target 1/2 sqrt2
rate 1/4
upper -1/4 -1/4 1/4 1/4
lower 1/2 1/2 1/2 1
summand -48*j^2 + 16*j + 1
start 0
end

entry eq2
family nk2nk
assign 1/2 1/2 1
target 768 pi^-1
rate 4/27
upper 1/2 3/4 3/4 5/4 5/4
lower 1 4/3 5/3 2 2
summand 368*j^3 + 952*j^2 + 810*j + 225
start 0
end

entry eq5
family nk2nk
assign 1/3 2/3 1
target 2187/4 sqrt3 pi^-1
rate 4/27
upper 1/3 2/3 5/6 7/6
lower 1 3/2 2 2
summand 621*j^3 + 1503*j^2 + 1164*j + 280
start 0
end

entry eq7
family nk2nk
assign -2/3 2/3 4/3
target 160/7 sqrt3 pi
rate 4/27
upper 2/3 1 3/2 13/6
lower 4/3 11/6 7/3 7/3
summand 69*j^3 + 247*j^2 + 284*j + 104
start 0
end

entry nk2nk-8192
family nk2nk
assign 1/4 3/4 1
target 8192 sqrt2 pi^-1
rate 4/27
upper 1/4 5/8 3/4 7/8 9/8 11/8
lower 1 4/3 3/2 5/3 2 2
summand 11776*j^4 + 36352*j^3 + 40976*j^2 + 19856*j + 3465
start 0
end

entry nk2nk-279936
family nk2nk
assign 1/6 5/6 1
target 279936/5 pi^-1
rate 4/27
upper 1/6 7/12 5/6 11/12 13/12 17/12
lower 1 4/3 3/2 5/3 2 2
summand 59616*j^4 + 184032*j^3 + 206748*j^2 + 99324*j + 17017
start 0
end

entry nk2nk-3360sqrt2
family nk2nk
assign -3/4 -1/4 1/2
target 3360 sqrt2
rate 4/27
upper 5/8 3/4 7/8 9/8 5/4 11/8
lower 1/2 1 3/2 3/2 11/6 13/6
summand 11776*j^4 + 32256*j^3 + 30224*j^2 + 11232*j + 1365
start 0
end

entry nk2nk-25515
family nk2nk
assign -5/6 -1/6 1/2
target 25515/8 sqrt3
rate 4/27
upper 7/12 2/3 11/12 13/12 4/3 17/12
lower 1/2 1 3/2 3/2 11/6 13/6
summand 14904*j^4 + 40824*j^3 + 38079*j^2 + 13932*j + 1624
start 0
end

entry nk2nk-3360cbrt2
family nk2nk
assign -2/3 -1/6 1/2
target 3360 cbrt2
rate 4/27
upper 7/12 2/3 5/6 13/12 7/6 4/3
lower 1/2 1 13/9 3/2 16/9 19/9
summand 14904*j^4 + 38772*j^3 + 34434*j^2 + 12039*j + 1330
start 0
end

entry eq8
family nk3nk
assign 1/4 3/4 1
target 33554432/105 sqrt2 pi^-1
rate 27/256
upper 1/4 3/4 11/12 13/12 17/12 19/12
lower 1 3/2 5/3 2 2 7/3
summand 175872*j^4 + 684544*j^3 + 979360*j^2 + 609312*j + 138567
start 0
end

entry nk3nk-327680
family nk3nk
assign 1/2 1/2 1
target 327680 pi^-1
rate 27/256
upper 1/2 1/2 5/6 5/6 7/6 7/6 3/2
lower 1 5/3 7/4 2 2 9/4 7/3
summand 131904*j^6 + 777216*j^5 + 1886448*j^4 + 2413504*j^3 + 1716268*j^2 + 643120*j + 99225
start 0
end

entry nk3nk-77pi
family nk3nk
assign 1/6 5/6 1
target 17414258688/77 pi^-1
rate 27/256
upper 1/6 13/18 5/6 17/18 19/18 23/18 25/18 29/18
lower 1 3/2 5/3 7/4 2 2 9/4 7/3
summand 96158016*j^6 + 566590464*j^5 + 1373338800*j^4 + 1751461056*j^3 + 1238515308*j^2 + 459977904*j + 70018325
start 0
end

entry 2nk3nk-14175
family 2nk3nk
assign 1/2 1/2 1/2
target 14175/8 pi
rate 108/3125
upper 1/4 1/4 1/3 1/3 2/3 2/3 3/4 3/4 1
lower 11/10 7/6 13/10 3/2 3/2 3/2 17/10 11/6 19/10
summand 1737792*j^8 + 7561536*j^7 + 14017560*j^6 + 14432512*j^5 + 9006976*j^4 + 3479240*j^3 + 809366*j^2 + 103131*j + 5472
start 0
end

entry 2nk3nk-162sqrt3
family 2nk3nk
assign 1/3 2/3 1
target 162 sqrt3 pi^-1
rate 108/3125
upper -2/9 -1/6 -1/9 1/9 1/6 2/9 4/9 5/9
lower 1/2 3/5 4/5 1 1 1 6/5 7/5
summand -19794537*j^6 - 6952473*j^5 + 1102491*j^4 + 258147*j^3 - 17244*j^2 + 396*j + 80
start 0
end

entry 2nk3nk-768sqrt2
family 2nk3nk
assign 1/4 3/4 1
target 768 sqrt2 pi^-1
rate 108/3125
upper -3/8 -1/4 -1/8 -1/12 1/12 1/8 1/4 3/8 5/12 7/12
lower 1/2 3/5 2/3 4/5 1 1 1 6/5 4/3 7/5
summand 1186332672*j^8 + 416677888*j^7 - 203526144*j^6 - 65040384*j^5 + 8069888*j^4 + 1789952*j^3 - 110576*j^2 + 1584*j + 315
start 0
end

entry eq4
family nkank
assign 1/6 1/6 1
target 55/18 pi
rate 1/4
upper 5/6 5/6 1
lower 7/6 17/12 23/12
summand 18*j^2 + 23*j + 6
start 0
end

entry cbrt2-2f1
family nkank
assign 1/6 1/3 5/6
target 4/3 cbrt2
rate 1/4
upper 1/2 2/3
lower 1/6 1
summand 1
start 0
shifted 0 3/4
end

entry chu2021-ex19
family nkank
assign 1/4 1/4 1
target 21/16 sqrt2 pi
rate 1/4
upper 3/4 3/4 1
lower 5/4 11/8 15/8
summand 12*j^2 + 15*j + 4
start 0
provenance Chu (2021), Example 19
end

entry cz-ex78
family nkank
assign 1/3 1/3 1
target 20/27 sqrt3 pi
rate 1/4
upper 2/3 2/3 1
lower 4/3 4/3 11/6
summand 9*j^2 + 11*j + 3
start 0
provenance Chu and Zhang (2014), Example 78
end

entry nka2nk-155925
family nka2nk
assign 1/4 1/4 1
target 155925/256 sqrt2 pi
rate 4/27
upper 3/4 3/4 1 3/2 3/2
lower 19/12 13/8 23/12 17/8 9/4
summand 2944*j^4 + 11408*j^3 + 16288*j^2 + 10125*j + 2304
start 0
end

entry nka2nk-24640
family nka2nk
assign 1/3 1/3 1
target 24640/243 sqrt3 pi
rate 4/27
upper 2/3 1 3/2 3/2
lower 14/9 17/9 13/6 20/9
summand 414*j^3 + 1323*j^2 + 1397*j + 486
start 0
end

entry nka2nk-1956955
family nka2nk
assign 1/6 1/6 1
target 1956955/648 pi
rate 4/27
upper 5/6 5/6 1 3/2 3/2
lower 19/12 29/18 35/18 25/12 41/18
summand 9936*j^4 + 38628*j^3 + 55236*j^2 + 34315*j + 7776
start 0
end

entry eq9
family 2nkank
assign 1/4 1/4 1/2
target 45 sqrt2
rate 4/27
upper 3/8 3/8 1/2 7/8 7/8
lower 3/4 1 13/12 17/12 7/4
summand 1472*j^3 + 1840*j^2 + 618*j + 45
start 0
end

entry 2nkank-320pi
family 2nkank
assign 1/3 1/3 2/3
target 320/27 sqrt3 pi
rate 4/27
upper 1/2 1/2 2/3 1
lower 7/6 11/9 14/9 17/9
summand 414*j^3 + 702*j^2 + 359*j + 54
start 0
end

entry 2nkank-28cbrt2
family 2nkank
assign 1/3 1/6 1/2
target 28 cbrt2
rate 4/27
upper 1/3 5/12 2/3 11/12
lower 1 10/9 13/9 16/9
summand 621*j^3 + 828*j^2 + 303*j + 26
start 0
end

entry lupas-18g
family altquarter
assign 1/2 1/2 0
target 18 catalan
rate -1/4
upper 1/2 1 1 1
lower 5/4 5/4 7/4 7/4
summand 40*j^2 + 56*j + 19
start 0
provenance Lupas (2000)
end

entry altq-21sqrt2
family altquarter
assign -1/4 1/2 1/4
target 21 sqrt2
rate -1/4
upper 5/8 3/4 9/8
lower 1 11/8 15/8
summand 80*j^2 + 114*j + 39
start 0
end

entry eq6
family altquarter
assign 1/3 1/2 -1/2
target 5 sqrt3
rate -1/4
upper 1/4 2/3 3/4 5/6
lower 11/12 1 17/12 3/2
summand 60*j^2 + 51*j + 10
start 0
end

entry eq3
family altquarter
assign -5/6 2/3 5/6
target 1215/7 cbrt2
rate -1/4
upper 2/3 11/12 17/12 13/6
lower 1 3/2 7/4 9/4
summand 360*j^2 + 678*j + 299
start 0
end

entry amdeberhan
family cubed
assign 1 0 2
target 24 zeta3
rate -1/27
upper 1 1
lower 4/3 5/3
summand (56*j^2 + 80*j + 29)/((2*j + 1)^2*(j + 1))
start 0
provenance Amdeberhan (1996)
end

entry eq10
family cubed
assign 1/2 0 3/2
target 567 zeta3
rate -1/27
upper 1/2 1/2 1/2 1 1 1 1 1
lower 5/4 5/4 5/4 4/3 5/3 7/4 7/4 7/4
summand 7168*j^5 + 23168*j^4 + 29584*j^3 + 18620*j^2 + 5761*j + 698
start 0
end

entry pm11a
numeric-only
target 16384/105 sqrt2 pi^-1
rate 1/4
upper 5/4 7/4 9/4 11/4
lower 1 2 5/2 3
summand 16*j^2 + 48*j + 33
start 0
end

entry rama-20n3
numeric-only
target 8 pi^-1
rate -1/4
upper 1/4 1/2 3/4
lower 1 1 1
summand 20*j + 3
start 0
provenance Ramanujan (1914)
end

entry rama-s2-10n1
numeric-only
target 9/4 sqrt2 pi^-1
rate 1/81
upper 1/4 1/2 3/4
lower 1 1 1
summand 10*j + 1
start 0
provenance Ramanujan (1914)
end

entry rama-s2-26390
numeric-only
target 9801/4 sqrt2 pi^-1
rate 1/96059601
upper 1/4 1/2 3/4
lower 1 1 1
summand 26390*j + 1103
start 0
provenance Ramanujan (1914)
end

entry cz-ex106
numeric-only
target 32 pi^-1
rate 4/27
upper 1/4 1/4 1/2 3/4 3/4
lower 1 1 1 4/3 5/3
summand 368*j^3 + 400*j^2 + 118*j + 9
start 0
provenance Chu and Zhang (2014), Example 106
end

entry chu-2187
numeric-only
target 2187 sqrt3 pi^-1
rate 27/256
upper 1/9 2/9 4/9 5/9 7/9 8/9
lower 1 1 1 5/4 3/2 7/4
summand 166941*j^4 + 260253*j^3 + 130464*j^2 + 23202*j + 1120
start 0
end

entry chu-60pi149
numeric-only
target 60 pi
target -149
rate 27/256
upper 1/6 1/6 1/2 5/6 5/6 1
lower 7/8 9/8 4/3 11/8 13/8 5/3
summand (32976*j^5 + 67896*j^4 + 52844*j^3 + 19156*j^2 + 3167*j + 180)/j
start 1
end

entry mohammed-z3
numeric-only
target -16 zeta3
rate -64/531441
upper 1/2 1/2 1/2 1 1 1 1 1
lower 1/3 1/3 1/3 1/3 2/3 2/3 2/3 2/3
summand (40885*j^5 - 80079*j^4 + 61626*j^3 - 23366*j^2 + 4374*j - 324)/(j^5*(2*j - 1)^3)
start 1
provenance Mohammed (2005)
end

entry wedeniwski-z3
numeric-only
target -8 zeta3
rate -1/110592
upper 1/2 1/2 1/2 1 1 1 1 1
lower 1/4 1/4 1/4 1/3 2/3 3/4 3/4 3/4
summand (126392*j^5 - 219252*j^4 + 144666*j^3 - 46039*j^2 + 7128*j - 432)/(j^5*(2*j - 1)^3)
start 1
provenance Wedeniwski (1998)
end

entry closing-sqrt2
numeric-only
target 1/2 sqrt2
rate 1/64
upper 1/4 3/4
lower 1/2 1
summand (-336*j^2 + 184*j + 3)/((4*j - 1)*(4*j - 3))
start 0
end

entry closing-pisq
numeric-only
target 1/2 pisq
rate 1/64
upper 1/2 1 1 1
lower 1/4 1/4 3/4 3/4
summand (42*j^2 - 23*j + 3)/(j^3*(2*j - 1))
start 1
end
)CATALOG";
}

} // namespace hyperaccel
