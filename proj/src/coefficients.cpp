#include "einsu/einstein.hpp"

namespace einsu::detail {

namespace {
using Z = BigInt;

Z pw(const Z& b, unsigned long e) {
  Z r;
  mpz_pow_ui(r.get_mpz_t(), b.get_mpz_t(), e);
  return r;
}
}  // namespace

std::vector<BigInt> f3_table(const BigInt& k1, const BigInt& k, const BigInt& p) {
  std::vector<BigInt> a(17);
  a[0] = (k * pw(k1, 7) * (Z(1) + (k * k1) + (pw(k, 2) * (Z(-2) + p))) * (Z(-2) + p + pw(k1, 2) + (k * k1 * (Z(-1) +
      p)) + (pw(k, 2) * (Z(-1) + p) * (Z(-2) + p))));
  a[1] = (Z(-2) * pw(k, 2) * pw(k1, 7) * (k1 + (Z(-1) * k) + (k * p)) * (Z(-3) + pw(k1, 2) + (Z(2) * p) + (Z(4) *
      pw(k, 2)) + (Z(-6) * p * pw(k, 2)) + (Z(-2) * k * k1) + (Z(2) * pw(k, 2) * pw(p, 2)) + (Z(2) * k * k1 * p)));
  a[2] = (pw(k, 2) * pw(k1, 6) * (Z(14) + pw(k1, 4) + (Z(-33) * pw(k, 2)) + (Z(-27) * p) + (Z(-7) * pw(k1, 2)) +
      (Z(10) * pw(p, 2)) + (Z(20) * pw(k, 4)) + (Z(-67) * pw(k, 2) * pw(p, 2)) + (Z(-62) * p * pw(k, 4)) + (Z(-34)
      * pw(k, 4) * pw(p, 3)) + (Z(-18) * k1 * pw(k, 3)) + (Z(-6) * k * pw(k1, 3)) + (Z(6) * pw(k, 4) * pw(p, 4)) +
      (Z(9) * p * pw(k1, 2)) + (Z(12) * k * k1) + (Z(16) * pw(k, 2) * pw(p, 3)) + (Z(17) * pw(k, 2) * pw(k1, 2)) +
      (Z(70) * pw(k, 4) * pw(p, 2)) + (Z(87) * p * pw(k, 2)) + (Z(-60) * k1 * pw(k, 3) * pw(p, 2)) + (Z(-43) * p *
      pw(k, 2) * pw(k1, 2)) + (Z(-36) * k * k1 * p) + (Z(12) * k * p * pw(k1, 3)) + (Z(18) * k * k1 * pw(p, 2)) +
      (Z(18) * k1 * pw(k, 3) * pw(p, 3)) + (Z(23) * pw(k, 2) * pw(k1, 2) * pw(p, 2)) + (Z(60) * k1 * p * pw(k,
      3))));
  a[3] = (Z(-2) * k * pw(k1, 6) * (k1 + (Z(-1) * k) + (k * p)) * (Z(-6) + (Z(-18) * pw(k, 4)) + (Z(2) * pw(k1, 2)) +
      (Z(4) * p) + (Z(23) * pw(k, 2)) + (Z(-47) * p * pw(k, 2)) + (Z(-44) * pw(k, 4) * pw(p, 2)) + (Z(-4) * k *
      k1) + (Z(-3) * pw(k, 2) * pw(k1, 2)) + (Z(6) * k1 * pw(k, 3)) + (Z(12) * pw(k, 4) * pw(p, 3)) + (Z(20) *
      pw(k, 2) * pw(p, 2)) + (Z(50) * p * pw(k, 4)) + (Z(-20) * k1 * p * pw(k, 3)) + (Z(4) * k * k1 * p) + (Z(7) *
      p * pw(k, 2) * pw(k1, 2)) + (Z(14) * k1 * pw(k, 3) * pw(p, 2))));
  a[4] = (k * pw(k1, 5) * (Z(16) + (Z(-70) * pw(k, 2)) + (Z(-41) * pw(k, 6)) + (Z(-12) * pw(k1, 2)) + (Z(-8) * p) +
      (Z(4) * pw(k1, 4)) + (Z(95) * pw(k, 4)) + (Z(-336) * p * pw(k, 4)) + (Z(-288) * pw(k, 6) * pw(p, 2)) +
      (Z(-245) * pw(k, 4) * pw(p, 3)) + (Z(-142) * pw(k, 2) * pw(p, 2)) + (Z(-95) * pw(k, 6) * pw(p, 4)) + (Z(-35)
      * k1 * pw(k, 3)) + (Z(-30) * pw(k, 4) * pw(k1, 2)) + (Z(-16) * k * pw(k1, 3)) + (Z(-4) * pw(k, 2) * pw(k1,
      4)) + (Z(8) * k * k1) + (Z(11) * pw(k, 3) * pw(k1, 3)) + (Z(15) * pw(k, 6) * pw(p, 5)) + (Z(22) * k1 * pw(k,
      5)) + (Z(39) * pw(k, 2) * pw(p, 3)) + (Z(50) * pw(k, 4) * pw(p, 4)) + (Z(52) * pw(k, 2) * pw(k1, 2)) +
      (Z(165) * p * pw(k, 2)) + (Z(173) * p * pw(k, 6)) + (Z(236) * pw(k, 6) * pw(p, 3)) + (Z(436) * pw(k, 4) *
      pw(p, 2)) + (Z(-250) * k1 * pw(k, 5) * pw(p, 3)) + (Z(-230) * pw(k, 4) * pw(k1, 2) * pw(p, 2)) + (Z(-212) *
      k1 * pw(k, 3) * pw(p, 2)) + (Z(-162) * k1 * p * pw(k, 5)) + (Z(-111) * p * pw(k, 2) * pw(k1, 2)) + (Z(-54) *
      p * pw(k, 3) * pw(k1, 3)) + (Z(-8) * k * k1 * p) + (Z(6) * p * pw(k, 2) * pw(k1, 4)) + (Z(16) * k * p *
      pw(k1, 3)) + (Z(52) * pw(k, 3) * pw(k1, 3) * pw(p, 2)) + (Z(65) * pw(k, 2) * pw(k1, 2) * pw(p, 2)) + (Z(66)
      * k1 * pw(k, 5) * pw(p, 4)) + (Z(82) * k1 * pw(k, 3) * pw(p, 3)) + (Z(97) * pw(k, 4) * pw(k1, 2) * pw(p, 3))
      + (Z(156) * k1 * p * pw(k, 3)) + (Z(163) * p * pw(k, 4) * pw(k1, 2)) + (Z(324) * k1 * pw(k, 5) * pw(p, 2))));
  a[5] = (Z(-2) * pw(k, 2) * pw(k1, 5) * (k1 + (Z(-1) * k) + (k * p)) * (Z(38) + (Z(-76) * pw(k, 2)) + (Z(-72) * p) +
      (Z(-6) * pw(k1, 2)) + (Z(28) * pw(p, 2)) + (Z(32) * pw(k, 4)) + (Z(-221) * pw(k, 2) * pw(p, 2)) + (Z(-134) *
      p * pw(k, 4)) + (Z(-130) * pw(k, 4) * pw(p, 3)) + (Z(12) * k * k1) + (Z(12) * p * pw(k1, 2)) + (Z(30) *
      pw(k, 4) * pw(p, 4)) + (Z(70) * pw(k, 2) * pw(p, 3)) + (Z(202) * pw(k, 4) * pw(p, 2)) + (Z(224) * p * pw(k,
      2)) + (Z(-78) * k1 * pw(k, 3) * pw(p, 2)) + (Z(-36) * k * k1 * p) + (Z(-18) * p * pw(k, 2) * pw(k1, 2)) +
      (Z(21) * pw(k, 2) * pw(k1, 2) * pw(p, 2)) + (Z(24) * k * k1 * pw(p, 2)) + (Z(36) * k1 * p * pw(k, 3)) +
      (Z(42) * k1 * pw(k, 3) * pw(p, 3))));
  a[6] = (pw(k1, 4) * ((Z(-164) * pw(k, 6)) + (Z(-60) * pw(k, 2)) + (Z(-4) * pw(k1, 2)) + (Z(4) * pw(k1, 4)) + (Z(44)
      * pw(k, 8)) + (Z(174) * pw(k, 4)) + (Z(-1163) * pw(k, 6) * pw(p, 2)) + (Z(-616) * pw(k, 8) * pw(p, 3)) +
      (Z(-587) * p * pw(k, 4)) + (Z(-449) * pw(k, 6) * pw(p, 4)) + (Z(-359) * pw(k, 4) * pw(p, 3)) + (Z(-236) * p
      * pw(k, 8)) + (Z(-140) * pw(k, 8) * pw(p, 5)) + (Z(-112) * pw(k, 4) * pw(k1, 2)) + (Z(-56) * pw(k, 2) *
      pw(p, 2)) + (Z(-16) * k * k1) + (Z(-16) * pw(k, 2) * pw(k1, 4)) + (Z(-8) * k * pw(k1, 3)) + (Z(-8) * pw(k,
      5) * pw(k1, 3)) + (Z(6) * pw(k, 4) * pw(k1, 4)) + (Z(8) * k1 * pw(k, 3)) + (Z(12) * pw(k, 6) * pw(k1, 2)) +
      (Z(16) * k1 * pw(k, 7)) + (Z(20) * pw(k, 8) * pw(p, 6)) + (Z(24) * k1 * pw(k, 5)) + (Z(48) * pw(k, 3) *
      pw(k1, 3)) + (Z(52) * pw(k, 2) * pw(k1, 2)) + (Z(76) * pw(k, 4) * pw(p, 4)) + (Z(80) * pw(k, 6) * pw(p, 5))
      + (Z(144) * p * pw(k, 2)) + (Z(404) * pw(k, 8) * pw(p, 4)) + (Z(524) * pw(k, 8) * pw(p, 2)) + (Z(668) *
      pw(k, 4) * pw(p, 2)) + (Z(683) * p * pw(k, 6)) + (Z(1013) * pw(k, 6) * pw(p, 3)) + (Z(-688) * k1 * pw(k, 5)
      * pw(p, 3)) + (Z(-613) * pw(k, 6) * pw(k1, 2) * pw(p, 3)) + (Z(-592) * k1 * pw(k, 7) * pw(p, 2)) + (Z(-577)
      * pw(k, 4) * pw(k1, 2) * pw(p, 2)) + (Z(-560) * k1 * pw(k, 7) * pw(p, 4)) + (Z(-320) * k1 * p * pw(k, 5)) +
      (Z(-215) * p * pw(k, 6) * pw(k1, 2)) + (Z(-182) * pw(k, 5) * pw(k1, 3) * pw(p, 2)) + (Z(-144) * p * pw(k, 3)
      * pw(k1, 3)) + (Z(-116) * p * pw(k, 2) * pw(k1, 2)) + (Z(-88) * k1 * pw(k, 3) * pw(p, 2)) + (Z(-20) * p *
      pw(k, 4) * pw(k1, 4)) + (Z(8) * k * k1 * p) + (Z(15) * pw(k, 4) * pw(k1, 4) * pw(p, 2)) + (Z(16) * k * p *
      pw(k1, 3)) + (Z(16) * k1 * pw(k, 3) * pw(p, 3)) + (Z(20) * p * pw(k, 2) * pw(k1, 4)) + (Z(32) * pw(k, 2) *
      pw(k1, 2) * pw(p, 2)) + (Z(74) * p * pw(k, 5) * pw(k1, 3)) + (Z(80) * k1 * p * pw(k, 3)) + (Z(80) * pw(k, 3)
      * pw(k1, 3) * pw(p, 2)) + (Z(116) * pw(k, 5) * pw(k1, 3) * pw(p, 3)) + (Z(122) * k1 * p * pw(k, 7)) +
      (Z(130) * k1 * pw(k, 7) * pw(p, 5)) + (Z(210) * k1 * pw(k, 5) * pw(p, 4)) + (Z(211) * pw(k, 6) * pw(k1, 2) *
      pw(p, 4)) + (Z(225) * pw(k, 4) * pw(k1, 2) * pw(p, 3)) + (Z(491) * p * pw(k, 4) * pw(k1, 2)) + (Z(605) *
      pw(k, 6) * pw(k1, 2) * pw(p, 2)) + (Z(774) * k1 * pw(k, 5) * pw(p, 2)) + (Z(884) * k1 * pw(k, 7) * pw(p,
      3))));
  a[7] = (Z(-2) * k * pw(k1, 4) * (k1 + (Z(-1) * k) + (k * p)) * (Z(24) + (Z(-120) * pw(k, 2)) + (Z(-28) * pw(k, 6))
      + (Z(-24) * p) + (Z(126) * pw(k, 4)) + (Z(-484) * p * pw(k, 4)) + (Z(-473) * pw(k, 4) * pw(p, 3)) + (Z(-364)
      * pw(k, 6) * pw(p, 2)) + (Z(-274) * pw(k, 2) * pw(p, 2)) + (Z(-200) * pw(k, 6) * pw(p, 4)) + (Z(-20) * k1 *
      pw(k, 5)) + (Z(-8) * pw(k, 2) * pw(k1, 2)) + (Z(10) * pw(k, 4) * pw(k1, 2)) + (Z(16) * k1 * pw(k, 3)) +
      (Z(40) * pw(k, 6) * pw(p, 5)) + (Z(72) * pw(k, 2) * pw(p, 3)) + (Z(120) * pw(k, 4) * pw(p, 4)) + (Z(164) * p
      * pw(k, 6)) + (Z(330) * p * pw(k, 2)) + (Z(388) * pw(k, 6) * pw(p, 3)) + (Z(711) * pw(k, 4) * pw(p, 2)) +
      (Z(-160) * k1 * pw(k, 5) * pw(p, 3)) + (Z(-120) * k1 * pw(k, 3) * pw(p, 2)) + (Z(-45) * pw(k, 4) * pw(k1, 2)
      * pw(p, 2)) + (Z(-30) * p * pw(k, 2) * pw(k1, 2)) + (Z(20) * k1 * p * pw(k, 5)) + (Z(30) * pw(k, 2) * pw(k1,
      2) * pw(p, 2)) + (Z(35) * pw(k, 4) * pw(k1, 2) * pw(p, 3)) + (Z(44) * k1 * p * pw(k, 3)) + (Z(60) * k1 *
      pw(k, 3) * pw(p, 3)) + (Z(70) * k1 * pw(k, 5) * pw(p, 4)) + (Z(90) * k1 * pw(k, 5) * pw(p, 2))));
  a[8] = (k * pw(k1, 3) * (Z(-32) + (Z(-254) * pw(k, 4)) + (Z(-26) * pw(k, 8)) + (Z(-24) * pw(k1, 4)) + (Z(16) * p) +
      (Z(32) * pw(k1, 2)) + (Z(144) * pw(k, 2)) + (Z(164) * pw(k, 6)) + (Z(-1812) * pw(k, 6) * pw(p, 3)) +
      (Z(-1596) * pw(k, 4) * pw(p, 2)) + (Z(-787) * p * pw(k, 6)) + (Z(-680) * pw(k, 8) * pw(p, 4)) + (Z(-475) *
      pw(k, 8) * pw(p, 2)) + (Z(-462) * pw(k, 4) * pw(p, 4)) + (Z(-448) * p * pw(k, 2)) + (Z(-441) * pw(k, 6) *
      pw(p, 5)) + (Z(-160) * pw(k, 2) * pw(k1, 2)) + (Z(-136) * pw(k, 2) * pw(p, 3)) + (Z(-115) * pw(k, 8) * pw(p,
      6)) + (Z(-64) * k1 * pw(k, 3)) + (Z(-64) * k1 * pw(k, 7)) + (Z(-64) * pw(k, 3) * pw(k1, 3)) + (Z(-8) * p *
      pw(k1, 2)) + (Z(-4) * pw(k, 4) * pw(k1, 4)) + (Z(11) * pw(k, 5) * pw(k1, 3)) + (Z(13) * pw(k, 6) * pw(k1,
      2)) + (Z(15) * pw(k, 8) * pw(p, 7)) + (Z(16) * p * pw(k1, 4)) + (Z(24) * pw(k, 2) * pw(k1, 4)) + (Z(48) * k
      * k1) + (Z(69) * pw(k, 4) * pw(k1, 2)) + (Z(70) * pw(k, 6) * pw(p, 6)) + (Z(79) * pw(k, 4) * pw(p, 5)) +
      (Z(80) * k * pw(k1, 3)) + (Z(107) * k1 * pw(k, 5)) + (Z(170) * p * pw(k, 8)) + (Z(376) * pw(k, 8) * pw(p,
      5)) + (Z(456) * pw(k, 2) * pw(p, 2)) + (Z(735) * pw(k, 8) * pw(p, 3)) + (Z(1051) * p * pw(k, 4)) + (Z(1182)
      * pw(k, 4) * pw(p, 3)) + (Z(1198) * pw(k, 6) * pw(p, 4)) + (Z(1608) * pw(k, 6) * pw(p, 2)) + (Z(-1337) *
      pw(k, 4) * pw(k1, 2) * pw(p, 3)) + (Z(-1246) * k1 * pw(k, 5) * pw(p, 4)) + (Z(-1135) * k1 * pw(k, 5) * pw(p,
      2)) + (Z(-1124) * k1 * pw(k, 7) * pw(p, 3)) + (Z(-910) * pw(k, 6) * pw(k1, 2) * pw(p, 4)) + (Z(-746) * p *
      pw(k, 4) * pw(k1, 2)) + (Z(-730) * k1 * pw(k, 7) * pw(p, 5)) + (Z(-571) * pw(k, 6) * pw(k1, 2) * pw(p, 2)) +
      (Z(-528) * pw(k, 2) * pw(k1, 2) * pw(p, 2)) + (Z(-416) * pw(k, 3) * pw(k1, 3) * pw(p, 2)) + (Z(-368) * k1 *
      pw(k, 3) * pw(p, 3)) + (Z(-310) * pw(k, 5) * pw(k1, 3) * pw(p, 3)) + (Z(-120) * k * k1 * p) + (Z(-120) * k *
      p * pw(k1, 3)) + (Z(-64) * k1 * p * pw(k, 3)) + (Z(-64) * p * pw(k, 2) * pw(k1, 4)) + (Z(-40) * pw(k, 4) *
      pw(k1, 4) * pw(p, 2)) + (Z(-32) * p * pw(k, 5) * pw(k1, 3)) + (Z(20) * pw(k, 4) * pw(k1, 4) * pw(p, 3)) +
      (Z(24) * p * pw(k, 4) * pw(k1, 4)) + (Z(40) * pw(k, 2) * pw(k1, 4) * pw(p, 2)) + (Z(48) * k * k1 * pw(p, 2))
      + (Z(64) * k * pw(k1, 3) * pw(p, 2)) + (Z(64) * k1 * pw(k, 3) * pw(p, 4)) + (Z(76) * p * pw(k, 6) * pw(k1,
      2)) + (Z(94) * k1 * p * pw(k, 5)) + (Z(126) * k1 * p * pw(k, 7)) + (Z(128) * pw(k, 2) * pw(k1, 2) * pw(p,
      3)) + (Z(150) * k1 * pw(k, 7) * pw(p, 6)) + (Z(150) * pw(k, 5) * pw(k1, 3) * pw(p, 4)) + (Z(160) * pw(k, 3)
      * pw(k1, 3) * pw(p, 3)) + (Z(181) * pw(k, 5) * pw(k1, 3) * pw(p, 2)) + (Z(265) * pw(k, 6) * pw(k1, 2) *
      pw(p, 5)) + (Z(272) * p * pw(k, 3) * pw(k1, 3)) + (Z(286) * k1 * pw(k, 7) * pw(p, 2)) + (Z(310) * k1 * pw(k,
      5) * pw(p, 5)) + (Z(395) * pw(k, 4) * pw(k1, 2) * pw(p, 4)) + (Z(480) * k1 * pw(k, 3) * pw(p, 2)) + (Z(544)
      * p * pw(k, 2) * pw(k1, 2)) + (Z(1127) * pw(k, 6) * pw(k1, 2) * pw(p, 3)) + (Z(1356) * k1 * pw(k, 7) * pw(p,
      4)) + (Z(1619) * pw(k, 4) * pw(k1, 2) * pw(p, 2)) + (Z(1870) * k1 * pw(k, 5) * pw(p, 3))));
  a[9] = (Z(-2) * pw(k1, 3) * (k1 + (Z(-1) * k) + (k * p)) * (Z(-8) + (Z(-107) * pw(k, 6)) + (Z(-80) * pw(k, 2)) +
      (Z(8) * pw(k1, 2)) + (Z(12) * pw(k, 8)) + (Z(196) * pw(k, 4)) + (Z(-1028) * pw(k, 6) * pw(p, 2)) + (Z(-664)
      * p * pw(k, 4)) + (Z(-517) * pw(k, 6) * pw(p, 4)) + (Z(-468) * pw(k, 8) * pw(p, 3)) + (Z(-448) * pw(k, 4) *
      pw(p, 3)) + (Z(-170) * pw(k, 8) * pw(p, 5)) + (Z(-104) * pw(k, 2) * pw(p, 2)) + (Z(-98) * p * pw(k, 8)) +
      (Z(-88) * k1 * pw(k, 5)) + (Z(-24) * pw(k, 2) * pw(k1, 2)) + (Z(-16) * k * k1) + (Z(-15) * pw(k, 6) * pw(k1,
      2)) + (Z(30) * k1 * pw(k, 7)) + (Z(30) * pw(k, 8) * pw(p, 6)) + (Z(44) * pw(k, 4) * pw(k1, 2)) + (Z(48) * k1
      * pw(k, 3)) + (Z(88) * pw(k, 4) * pw(p, 4)) + (Z(110) * pw(k, 6) * pw(p, 5)) + (Z(208) * p * pw(k, 2)) +
      (Z(302) * pw(k, 8) * pw(p, 2)) + (Z(392) * pw(k, 8) * pw(p, 4)) + (Z(526) * p * pw(k, 6)) + (Z(836) * pw(k,
      4) * pw(p, 2)) + (Z(1016) * pw(k, 6) * pw(p, 3)) + (Z(-200) * k1 * pw(k, 5) * pw(p, 3)) + (Z(-190) * k1 *
      pw(k, 7) * pw(p, 4)) + (Z(-110) * k1 * p * pw(k, 7)) + (Z(-60) * pw(k, 4) * pw(k1, 2) * pw(p, 2)) + (Z(-60)
      * pw(k, 6) * pw(k1, 2) * pw(p, 3)) + (Z(-48) * k1 * p * pw(k, 3)) + (Z(-32) * p * pw(k, 4) * pw(k1, 2)) +
      (Z(16) * k * k1 * p) + (Z(35) * pw(k, 6) * pw(k1, 2) * pw(p, 4)) + (Z(40) * p * pw(k, 6) * pw(k1, 2)) +
      (Z(40) * pw(k, 4) * pw(k1, 2) * pw(p, 3)) + (Z(56) * k1 * pw(k, 5) * pw(p, 2)) + (Z(70) * k1 * pw(k, 7) *
      pw(p, 5)) + (Z(80) * k1 * pw(k, 5) * pw(p, 4)) + (Z(80) * k1 * pw(k, 7) * pw(p, 2)) + (Z(120) * k1 * pw(k,
      7) * pw(p, 3)) + (Z(152) * k1 * p * pw(k, 5))));
  a[10] = (pw(k1, 2) * ((Z(-184) * pw(k, 4)) + (Z(-89) * pw(k, 8)) + (Z(-16) * pw(k1, 4)) + (Z(8) * pw(k, 10)) +
      (Z(16) * pw(k1, 2)) + (Z(48) * pw(k, 2)) + (Z(226) * pw(k, 6)) + (pw(k, 6) * pw(k1, 2)) + (pw(k, 6) * pw(k1,
      4)) + (pw(k, 8) * pw(k1, 2)) + (Z(-1734) * pw(k, 6) * pw(p, 3)) + (Z(-1307) * pw(k, 8) * pw(p, 4)) +
      (Z(-1159) * pw(k, 8) * pw(p, 2)) + (Z(-1009) * p * pw(k, 6)) + (Z(-960) * pw(k, 4) * pw(p, 2)) + (Z(-406) *
      pw(k, 10) * pw(p, 3)) + (Z(-378) * pw(k, 10) * pw(p, 5)) + (Z(-289) * pw(k, 6) * pw(p, 5)) + (Z(-236) * k1 *
      pw(k, 7)) + (Z(-221) * pw(k, 8) * pw(p, 6)) + (Z(-208) * p * pw(k, 2)) + (Z(-176) * pw(k, 3) * pw(k1, 3)) +
      (Z(-136) * pw(k, 4) * pw(p, 4)) + (Z(-120) * pw(k, 2) * pw(k1, 2)) + (Z(-96) * k1 * pw(k, 3)) + (Z(-62) * p
      * pw(k, 10)) + (Z(-50) * pw(k, 10) * pw(p, 7)) + (Z(-30) * pw(k, 7) * pw(k1, 3)) + (Z(-16) * pw(k, 4) *
      pw(k1, 4)) + (Z(6) * pw(k, 10) * pw(p, 8)) + (Z(32) * k * k1) + (Z(32) * pw(k, 8) * pw(p, 7)) + (Z(40) *
      pw(k, 2) * pw(k1, 4)) + (Z(42) * pw(k, 6) * pw(p, 6)) + (Z(62) * k1 * pw(k, 9)) + (Z(64) * k * pw(k1, 3)) +
      (Z(80) * pw(k, 2) * pw(p, 2)) + (Z(96) * pw(k, 5) * pw(k1, 3)) + (Z(176) * pw(k, 4) * pw(k1, 2)) + (Z(182) *
      pw(k, 10) * pw(p, 6)) + (Z(192) * k1 * pw(k, 5)) + (Z(210) * pw(k, 10) * pw(p, 2)) + (Z(489) * p * pw(k, 8))
      + (Z(490) * pw(k, 10) * pw(p, 4)) + (Z(576) * pw(k, 4) * pw(p, 3)) + (Z(697) * pw(k, 8) * pw(p, 5)) +
      (Z(784) * p * pw(k, 4)) + (Z(938) * pw(k, 6) * pw(p, 4)) + (Z(1558) * pw(k, 8) * pw(p, 3)) + (Z(1826) *
      pw(k, 6) * pw(p, 2)) + (Z(-1904) * k1 * pw(k, 7) * pw(p, 3)) + (Z(-1652) * pw(k, 6) * pw(k1, 2) * pw(p, 2))
      + (Z(-1553) * pw(k, 6) * pw(k1, 2) * pw(p, 4)) + (Z(-1252) * k1 * pw(k, 7) * pw(p, 5)) + (Z(-1170) * k1 *
      pw(k, 9) * pw(p, 4)) + (Z(-1064) * p * pw(k, 4) * pw(k1, 2)) + (Z(-1000) * pw(k, 4) * pw(k1, 2) * pw(p, 3))
      + (Z(-773) * pw(k, 8) * pw(k1, 2) * pw(p, 5)) + (Z(-702) * pw(k, 8) * pw(k1, 2) * pw(p, 3)) + (Z(-656) * k1
      * pw(k, 5) * pw(p, 4)) + (Z(-592) * k1 * pw(k, 5) * pw(p, 2)) + (Z(-556) * k1 * pw(k, 9) * pw(p, 6)) +
      (Z(-544) * pw(k, 5) * pw(k1, 3) * pw(p, 3)) + (Z(-304) * pw(k, 3) * pw(k1, 3) * pw(p, 2)) + (Z(-290) * pw(k,
      7) * pw(k1, 3) * pw(p, 4)) + (Z(-264) * k1 * p * pw(k, 9)) + (Z(-240) * k1 * p * pw(k, 5)) + (Z(-224) * p *
      pw(k, 5) * pw(k1, 3)) + (Z(-128) * pw(k, 2) * pw(k1, 2) * pw(p, 2)) + (Z(-112) * k1 * pw(k, 3) * pw(p, 2)) +
      (Z(-96) * pw(k, 4) * pw(k1, 4) * pw(p, 2)) + (Z(-72) * p * pw(k, 2) * pw(k1, 4)) + (Z(-64) * k * p * pw(k1,
      3)) + (Z(-40) * pw(k, 6) * pw(k1, 4) * pw(p, 3)) + (Z(-32) * k * k1 * p) + (Z(-32) * pw(k, 7) * pw(k1, 3) *
      pw(p, 2)) + (Z(-12) * p * pw(k, 6) * pw(k1, 4)) + (Z(11) * p * pw(k, 8) * pw(k1, 2)) + (Z(15) * pw(k, 6) *
      pw(k1, 4) * pw(p, 4)) + (Z(24) * pw(k, 2) * pw(k1, 4) * pw(p, 2)) + (Z(32) * k1 * pw(k, 3) * pw(p, 3)) +
      (Z(32) * p * pw(k, 7) * pw(k1, 3)) + (Z(36) * pw(k, 6) * pw(k1, 4) * pw(p, 2)) + (Z(40) * pw(k, 4) * pw(k1,
      4) * pw(p, 3)) + (Z(72) * p * pw(k, 4) * pw(k1, 4)) + (Z(96) * k1 * pw(k, 5) * pw(p, 5)) + (Z(96) * pw(k, 3)
      * pw(k1, 3) * pw(p, 3)) + (Z(102) * k1 * pw(k, 9) * pw(p, 7)) + (Z(116) * pw(k, 7) * pw(k1, 3) * pw(p, 5)) +
      (Z(143) * pw(k, 8) * pw(k1, 2) * pw(p, 2)) + (Z(160) * pw(k, 5) * pw(k1, 3) * pw(p, 4)) + (Z(176) * k1 * p *
      pw(k, 3)) + (Z(192) * pw(k, 4) * pw(k1, 2) * pw(p, 4)) + (Z(197) * pw(k, 8) * pw(k1, 2) * pw(p, 6)) +
      (Z(204) * pw(k, 7) * pw(k1, 3) * pw(p, 3)) + (Z(238) * k1 * pw(k, 7) * pw(p, 2)) + (Z(262) * k1 * pw(k, 7) *
      pw(p, 6)) + (Z(288) * k1 * pw(k, 9) * pw(p, 2)) + (Z(336) * p * pw(k, 2) * pw(k1, 2)) + (Z(350) * k1 * pw(k,
      9) * pw(p, 3)) + (Z(371) * pw(k, 6) * pw(k1, 2) * pw(p, 5)) + (Z(384) * p * pw(k, 3) * pw(k1, 3)) + (Z(419)
      * p * pw(k, 6) * pw(k1, 2)) + (Z(512) * pw(k, 5) * pw(k1, 3) * pw(p, 2)) + (Z(548) * k1 * p * pw(k, 7)) +
      (Z(1123) * pw(k, 8) * pw(k1, 2) * pw(p, 4)) + (Z(1188) * k1 * pw(k, 9) * pw(p, 5)) + (Z(1200) * k1 * pw(k,
      5) * pw(p, 3)) + (Z(1616) * pw(k, 4) * pw(k1, 2) * pw(p, 2)) + (Z(2344) * k1 * pw(k, 7) * pw(p, 4)) +
      (Z(2414) * pw(k, 6) * pw(k1, 2) * pw(p, 3))));
  a[11] = (Z(-2) * k * pw(k1, 2) * (Z(-1) + p) * (k1 + (Z(-1) * k) + (k * p)) * (Z(24) + (Z(-144) * pw(k, 2)) +
      (Z(-43) * pw(k, 6)) + (Z(2) * pw(k, 8)) + (Z(24) * pw(k1, 2)) + (Z(158) * pw(k, 4)) + (Z(-474) * p * pw(k,
      4)) + (Z(-460) * pw(k, 6) * pw(p, 2)) + (Z(-278) * pw(k, 4) * pw(p, 3)) + (Z(-229) * pw(k, 6) * pw(p, 4)) +
      (Z(-152) * pw(k, 8) * pw(p, 3)) + (Z(-136) * pw(k, 2) * pw(p, 2)) + (Z(-108) * k1 * pw(k, 5)) + (Z(-72) *
      pw(k, 2) * pw(k1, 2)) + (Z(-64) * pw(k, 8) * pw(p, 5)) + (Z(-48) * k * k1) + (Z(-24) * p * pw(k, 8)) +
      (Z(-9) * pw(k, 6) * pw(k1, 2)) + (Z(12) * pw(k, 8) * pw(p, 6)) + (Z(18) * k1 * pw(k, 7)) + (Z(52) * pw(k, 4)
      * pw(p, 4)) + (Z(52) * pw(k, 6) * pw(p, 5)) + (Z(54) * pw(k, 4) * pw(k1, 2)) + (Z(88) * pw(k, 8) * pw(p, 2))
      + (Z(138) * pw(k, 8) * pw(p, 4)) + (Z(144) * k1 * pw(k, 3)) + (Z(232) * p * pw(k, 6)) + (Z(272) * p * pw(k,
      2)) + (Z(448) * pw(k, 6) * pw(p, 3)) + (Z(550) * pw(k, 4) * pw(p, 2)) + (Z(-144) * k1 * p * pw(k, 3)) +
      (Z(-120) * k1 * pw(k, 5) * pw(p, 3)) + (Z(-96) * k1 * pw(k, 5) * pw(p, 2)) + (Z(-90) * k1 * p * pw(k, 7)) +
      (Z(-90) * k1 * pw(k, 7) * pw(p, 4)) + (Z(-78) * p * pw(k, 4) * pw(k1, 2)) + (Z(-30) * pw(k, 4) * pw(k1, 2) *
      pw(p, 2)) + (Z(-24) * pw(k, 6) * pw(k1, 2) * pw(p, 2)) + (Z(-24) * pw(k, 6) * pw(k1, 2) * pw(p, 3)) + (Z(21)
      * pw(k, 6) * pw(k1, 2) * pw(p, 4)) + (Z(30) * pw(k, 4) * pw(k1, 2) * pw(p, 3)) + (Z(36) * p * pw(k, 6) *
      pw(k1, 2)) + (Z(42) * k1 * pw(k, 7) * pw(p, 5)) + (Z(48) * k * k1 * p) + (Z(60) * k1 * pw(k, 5) * pw(p, 4))
      + (Z(120) * k1 * pw(k, 7) * pw(p, 2)) + (Z(264) * k1 * p * pw(k, 5))));
  a[12] = (k1 * ((Z(-1) * pw(k, 11)) + (Z(-106) * pw(k, 7)) + (Z(-48) * pw(k, 3)) + (Z(-16) * k1) + (Z(16) * k) +
      (Z(16) * pw(k1, 3)) + (Z(23) * pw(k, 9)) + (Z(128) * pw(k, 5)) + (pw(k, 11) * pw(p, 9)) + (Z(-966) * pw(k,
      7) * pw(p, 2)) + (Z(-654) * pw(k, 7) * pw(p, 4)) + (Z(-632) * p * pw(k, 5)) + (Z(-632) * pw(k, 5) * pw(p,
      3)) + (Z(-571) * pw(k, 9) * pw(p, 3)) + (Z(-348) * pw(k, 9) * pw(p, 5)) + (Z(-336) * pw(k, 3) * pw(p, 2)) +
      (Z(-296) * k1 * pw(k, 6)) + (Z(-192) * pw(k, 2) * pw(k1, 3)) + (Z(-144) * pw(k, 6) * pw(k1, 3)) + (Z(-142) *
      p * pw(k, 9)) + (Z(-126) * pw(k, 11) * pw(p, 4)) + (Z(-84) * pw(k, 11) * pw(p, 6)) + (Z(-68) * pw(k, 5) *
      pw(k1, 2)) + (Z(-66) * pw(k, 7) * pw(p, 6)) + (Z(-48) * pw(k, 5) * pw(p, 5)) + (Z(-43) * pw(k, 9) * pw(p,
      7)) + (Z(-36) * pw(k, 11) * pw(p, 2)) + (Z(-32) * k * pw(k1, 2)) + (Z(-32) * k1 * pw(k, 2)) + (Z(-26) * k1 *
      pw(k, 10)) + (Z(-24) * pw(k, 3) * pw(k1, 4)) + (Z(-24) * pw(k, 9) * pw(k1, 2)) + (Z(-16) * k * p) + (Z(-9) *
      pw(k, 11) * pw(p, 8)) + (Z(4) * pw(k, 5) * pw(k1, 4)) + (Z(6) * pw(k, 9) * pw(p, 8)) + (Z(9) * p * pw(k,
      11)) + (Z(9) * pw(k, 7) * pw(p, 7)) + (Z(32) * k * pw(k1, 4)) + (Z(36) * pw(k, 11) * pw(p, 7)) + (Z(37) *
      pw(k, 8) * pw(k1, 3)) + (Z(42) * pw(k, 7) * pw(k1, 2)) + (Z(84) * pw(k, 11) * pw(p, 3)) + (Z(96) * pw(k, 3)
      * pw(p, 3)) + (Z(126) * pw(k, 11) * pw(p, 5)) + (Z(128) * k1 * pw(k, 4)) + (Z(152) * pw(k, 9) * pw(p, 6)) +
      (Z(176) * pw(k, 3) * pw(k1, 2)) + (Z(183) * k1 * pw(k, 8)) + (Z(224) * pw(k, 4) * pw(k1, 3)) + (Z(248) *
      pw(k, 5) * pw(p, 4)) + (Z(261) * pw(k, 7) * pw(p, 5)) + (Z(288) * p * pw(k, 3)) + (Z(378) * pw(k, 9) * pw(p,
      2)) + (Z(495) * p * pw(k, 7)) + (Z(545) * pw(k, 9) * pw(p, 4)) + (Z(936) * pw(k, 5) * pw(p, 2)) + (Z(1027) *
      pw(k, 7) * pw(p, 3)) + (Z(-1856) * pw(k, 5) * pw(k1, 2) * pw(p, 2)) + (Z(-1513) * k1 * pw(k, 8) * pw(p, 4))
      + (Z(-1472) * pw(k, 7) * pw(k1, 2) * pw(p, 3)) + (Z(-1072) * k1 * pw(k, 6) * pw(p, 3)) + (Z(-889) * pw(k, 7)
      * pw(k1, 2) * pw(p, 5)) + (Z(-812) * pw(k, 5) * pw(k1, 2) * pw(p, 4)) + (Z(-768) * p * pw(k, 3) * pw(k1, 2))
      + (Z(-696) * k1 * p * pw(k, 8)) + (Z(-652) * k1 * pw(k, 8) * pw(p, 6)) + (Z(-634) * k1 * pw(k, 10) * pw(p,
      5)) + (Z(-520) * k1 * pw(k, 6) * pw(p, 5)) + (Z(-464) * p * pw(k, 4) * pw(k1, 3)) + (Z(-380) * pw(k, 9) *
      pw(k1, 2) * pw(p, 4)) + (Z(-358) * pw(k, 9) * pw(k1, 2) * pw(p, 6)) + (Z(-340) * k1 * pw(k, 10) * pw(p, 2))
      + (Z(-336) * pw(k, 6) * pw(k1, 3) * pw(p, 4)) + (Z(-272) * k1 * p * pw(k, 4)) + (Z(-272) * pw(k, 4) * pw(k1,
      3) * pw(p, 3)) + (Z(-248) * pw(k, 3) * pw(k1, 2) * pw(p, 3)) + (Z(-230) * k1 * pw(k, 10) * pw(p, 7)) +
      (Z(-224) * pw(k, 6) * pw(k1, 3) * pw(p, 2)) + (Z(-191) * p * pw(k, 7) * pw(k1, 2)) + (Z(-146) * pw(k, 8) *
      pw(k1, 3) * pw(p, 5)) + (Z(-128) * pw(k, 2) * pw(k1, 3) * pw(p, 2)) + (Z(-112) * k1 * pw(k, 6) * pw(p, 2)) +
      (Z(-96) * k1 * pw(k, 2) * pw(p, 2)) + (Z(-86) * p * pw(k, 8) * pw(k1, 3)) + (Z(-80) * k1 * pw(k, 4) * pw(p,
      2)) + (Z(-72) * pw(k, 3) * pw(k1, 4) * pw(p, 2)) + (Z(-64) * pw(k, 5) * pw(k1, 4) * pw(p, 3)) + (Z(-48) * k1
      * pw(k, 4) * pw(p, 4)) + (Z(-38) * pw(k, 9) * pw(k1, 2) * pw(p, 2)) + (Z(-32) * k * p * pw(k1, 4)) + (Z(-32)
      * p * pw(k, 5) * pw(k1, 4)) + (Z(-20) * pw(k, 7) * pw(k1, 4) * pw(p, 4)) + (Z(-12) * pw(k, 7) * pw(k1, 4) *
      pw(p, 2)) + (Z(2) * p * pw(k, 7) * pw(k1, 4)) + (Z(6) * pw(k, 7) * pw(k1, 4) * pw(p, 5)) + (Z(16) * pw(k, 3)
      * pw(k1, 4) * pw(p, 3)) + (Z(16) * pw(k, 8) * pw(k1, 3) * pw(p, 3)) + (Z(20) * pw(k, 5) * pw(k1, 4) * pw(p,
      4)) + (Z(24) * pw(k, 7) * pw(k1, 4) * pw(p, 3)) + (Z(26) * pw(k, 8) * pw(k1, 3) * pw(p, 2)) + (Z(32) * k * p
      * pw(k1, 2)) + (Z(38) * k1 * pw(k, 10) * pw(p, 8)) + (Z(52) * pw(k, 8) * pw(k1, 3) * pw(p, 6)) + (Z(63) * p
      * pw(k, 9) * pw(k1, 2)) + (Z(64) * k1 * pw(k, 6) * pw(p, 6)) + (Z(64) * pw(k, 4) * pw(k1, 3) * pw(p, 4)) +
      (Z(72) * pw(k, 5) * pw(k1, 4) * pw(p, 2)) + (Z(80) * p * pw(k, 3) * pw(k1, 4)) + (Z(80) * pw(k, 6) * pw(k1,
      3) * pw(p, 5)) + (Z(83) * pw(k, 9) * pw(k1, 2) * pw(p, 7)) + (Z(85) * pw(k, 9) * pw(k1, 2) * pw(p, 3)) +
      (Z(101) * pw(k, 8) * pw(k1, 3) * pw(p, 4)) + (Z(118) * k1 * pw(k, 8) * pw(p, 7)) + (Z(128) * pw(k, 5) *
      pw(k1, 2) * pw(p, 5)) + (Z(154) * k1 * p * pw(k, 10)) + (Z(179) * pw(k, 7) * pw(k1, 2) * pw(p, 6)) + (Z(192)
      * k1 * p * pw(k, 2)) + (Z(208) * k1 * pw(k, 4) * pw(p, 3)) + (Z(220) * k1 * pw(k, 10) * pw(p, 4)) + (Z(240)
      * p * pw(k, 6) * pw(k1, 3)) + (Z(256) * p * pw(k, 2) * pw(k1, 3)) + (Z(262) * k1 * pw(k, 10) * pw(p, 3)) +
      (Z(322) * k1 * pw(k, 8) * pw(p, 3)) + (Z(384) * pw(k, 6) * pw(k1, 3) * pw(p, 3)) + (Z(512) * pw(k, 4) *
      pw(k1, 3) * pw(p, 2)) + (Z(556) * k1 * pw(k, 10) * pw(p, 6)) + (Z(569) * pw(k, 9) * pw(k1, 2) * pw(p, 5)) +
      (Z(673) * pw(k, 7) * pw(k1, 2) * pw(p, 2)) + (Z(696) * k1 * p * pw(k, 6)) + (Z(774) * k1 * pw(k, 8) * pw(p,
      2)) + (Z(824) * p * pw(k, 5) * pw(k1, 2)) + (Z(840) * pw(k, 3) * pw(k1, 2) * pw(p, 2)) + (Z(1240) * k1 *
      pw(k, 6) * pw(p, 4)) + (Z(1464) * k1 * pw(k, 8) * pw(p, 5)) + (Z(1658) * pw(k, 7) * pw(k1, 2) * pw(p, 4)) +
      (Z(1784) * pw(k, 5) * pw(k1, 2) * pw(p, 3))));
  a[13] = (Z(-2) * k1 * (k1 + (Z(-1) * k) + (k * p)) * (Z(16) + (Z(-112) * pw(k, 4)) + (Z(-16) * pw(k1, 2)) + (Z(-6) *
      pw(k, 8)) + (Z(40) * pw(k, 2)) + (Z(54) * pw(k, 6)) + (Z(-488) * pw(k, 6) * pw(p, 3)) + (Z(-392) * pw(k, 4)
      * pw(p, 2)) + (Z(-288) * pw(k, 8) * pw(p, 4)) + (Z(-256) * p * pw(k, 6)) + (Z(-183) * pw(k, 8) * pw(p, 2)) +
      (Z(-144) * p * pw(k, 2)) + (Z(-112) * k1 * pw(k, 3)) + (Z(-88) * pw(k, 6) * pw(p, 5)) + (Z(-72) * pw(k, 4) *
      pw(k1, 2)) + (Z(-70) * pw(k, 10) * pw(p, 5)) + (Z(-59) * pw(k, 8) * pw(p, 6)) + (Z(-56) * pw(k, 4) * pw(p,
      4)) + (Z(-52) * k1 * pw(k, 7)) + (Z(-42) * pw(k, 10) * pw(p, 3)) + (Z(-14) * pw(k, 10) * pw(p, 7)) + (Z(-2)
      * p * pw(k, 10)) + (Z(-2) * pw(k, 8) * pw(k1, 2)) + (Z(2) * pw(k, 10) * pw(p, 8)) + (Z(4) * k1 * pw(k, 9)) +
      (Z(10) * pw(k, 8) * pw(p, 7)) + (Z(12) * pw(k, 6) * pw(p, 6)) + (Z(14) * pw(k, 10) * pw(p, 2)) + (Z(26) *
      pw(k, 6) * pw(k1, 2)) + (Z(32) * k * k1) + (Z(42) * pw(k, 10) * pw(p, 6)) + (Z(56) * p * pw(k, 8)) + (Z(56)
      * pw(k, 2) * pw(k1, 2)) + (Z(70) * pw(k, 10) * pw(p, 4)) + (Z(72) * pw(k, 2) * pw(p, 2)) + (Z(144) * k1 *
      pw(k, 5)) + (Z(168) * pw(k, 8) * pw(p, 5)) + (Z(224) * pw(k, 4) * pw(p, 3)) + (Z(278) * pw(k, 6) * pw(p, 4))
      + (Z(302) * pw(k, 8) * pw(p, 3)) + (Z(336) * p * pw(k, 4)) + (Z(488) * pw(k, 6) * pw(p, 2)) + (Z(-480) * k1
      * pw(k, 7) * pw(p, 2)) + (Z(-432) * k1 * p * pw(k, 5)) + (Z(-170) * k1 * pw(k, 9) * pw(p, 3)) + (Z(-144) *
      k1 * pw(k, 3) * pw(p, 2)) + (Z(-144) * k1 * pw(k, 5) * pw(p, 3)) + (Z(-108) * p * pw(k, 6) * pw(k1, 2)) +
      (Z(-84) * k1 * pw(k, 7) * pw(p, 5)) + (Z(-72) * pw(k, 4) * pw(k1, 2) * pw(p, 2)) + (Z(-50) * k1 * pw(k, 9) *
      pw(p, 6)) + (Z(-48) * p * pw(k, 2) * pw(k1, 2)) + (Z(-45) * pw(k, 8) * pw(k1, 2) * pw(p, 2)) + (Z(-40) * k1
      * p * pw(k, 9)) + (Z(-32) * k * k1 * p) + (Z(-32) * pw(k, 6) * pw(k1, 2) * pw(p, 3)) + (Z(-30) * pw(k, 6) *
      pw(k1, 2) * pw(p, 4)) + (Z(-18) * pw(k, 8) * pw(k1, 2) * pw(p, 5)) + (Z(-4) * k1 * pw(k, 7) * pw(p, 4)) +
      (Z(7) * pw(k, 8) * pw(k1, 2) * pw(p, 6)) + (Z(12) * pw(k, 6) * pw(k1, 2) * pw(p, 5)) + (Z(14) * k1 * pw(k,
      9) * pw(p, 7)) + (Z(18) * p * pw(k, 8) * pw(k1, 2)) + (Z(24) * k1 * pw(k, 7) * pw(p, 6)) + (Z(24) * pw(k, 2)
      * pw(k1, 2) * pw(p, 2)) + (Z(36) * k1 * pw(k, 9) * pw(p, 5)) + (Z(40) * pw(k, 8) * pw(k1, 2) * pw(p, 3)) +
      (Z(48) * k1 * pw(k, 3) * pw(p, 3)) + (Z(80) * k1 * pw(k, 9) * pw(p, 4)) + (Z(126) * k1 * pw(k, 9) * pw(p,
      2)) + (Z(132) * pw(k, 6) * pw(k1, 2) * pw(p, 2)) + (Z(144) * p * pw(k, 4) * pw(k1, 2)) + (Z(208) * k1 * p *
      pw(k, 3)) + (Z(268) * k1 * p * pw(k, 7)) + (Z(328) * k1 * pw(k, 7) * pw(p, 3)) + (Z(432) * k1 * pw(k, 5) *
      pw(p, 2))));
  a[14] = ((Z(-44) * pw(k, 6)) + (Z(-16) * pw(k1, 2)) + (Z(-2) * pw(k, 10)) + (Z(16) * pw(k, 2)) + (Z(16) * pw(k, 4))
      + (Z(16) * pw(k1, 4)) + (Z(18) * pw(k, 8)) + (pw(k, 8) * pw(p, 5)) + (pw(k, 10) * pw(p, 8)) + (Z(-296) *
      pw(k, 6) * pw(p, 2)) + (Z(-208) * p * pw(k, 4)) + (Z(-200) * pw(k, 5) * pw(k1, 3)) + (Z(-171) * pw(k, 8) *
      pw(p, 3)) + (Z(-144) * k1 * pw(k, 5)) + (Z(-96) * k * pw(k1, 3)) + (Z(-89) * p * pw(k, 8)) + (Z(-80) * pw(k,
      4) * pw(p, 3)) + (Z(-74) * pw(k, 8) * pw(k1, 2)) + (Z(-68) * pw(k, 4) * pw(k1, 2)) + (Z(-56) * k1 * pw(k,
      9)) + (Z(-48) * pw(k, 2) * pw(p, 2)) + (Z(-44) * pw(k, 6) * pw(p, 4)) + (Z(-35) * pw(k, 10) * pw(p, 2)) +
      (Z(-35) * pw(k, 10) * pw(p, 4)) + (Z(-20) * pw(k, 9) * pw(k1, 3)) + (Z(-16) * pw(k, 2) * pw(k1, 4)) +
      (Z(-12) * pw(k, 8) * pw(p, 6)) + (Z(-5) * pw(k, 10) * pw(p, 7)) + (Z(3) * pw(k, 8) * pw(p, 7)) + (Z(4) * k1
      * pw(k, 11)) + (Z(4) * pw(k, 4) * pw(k1, 4)) + (Z(7) * pw(k, 10) * pw(p, 5)) + (Z(7) * pw(k, 10) * pw(p, 6))
      + (Z(13) * p * pw(k, 10)) + (Z(16) * pw(k, 4) * pw(p, 4)) + (Z(18) * pw(k, 10) * pw(k1, 2)) + (Z(49) * pw(k,
      10) * pw(p, 3)) + (Z(60) * pw(k, 6) * pw(k1, 2)) + (Z(74) * pw(k, 8) * pw(p, 4)) + (Z(96) * p * pw(k, 2)) +
      (Z(96) * pw(k, 2) * pw(k1, 2)) + (Z(112) * pw(k, 7) * pw(k1, 3)) + (Z(176) * pw(k, 8) * pw(p, 2)) + (Z(184)
      * k1 * pw(k, 7)) + (Z(192) * p * pw(k, 6)) + (Z(192) * pw(k, 3) * pw(k1, 3)) + (Z(192) * pw(k, 4) * pw(p,
      2)) + (Z(192) * pw(k, 6) * pw(p, 3)) + (pw(k, 8) * pw(k1, 4) * pw(p, 2)) + (pw(k, 8) * pw(k1, 4) * pw(p, 6))
      + (Z(-968) * pw(k, 6) * pw(k1, 2) * pw(p, 3)) + (Z(-848) * pw(k, 4) * pw(k1, 2) * pw(p, 2)) + (Z(-576) * k1
      * p * pw(k, 7)) + (Z(-568) * k1 * pw(k, 7) * pw(p, 4)) + (Z(-494) * k1 * pw(k, 9) * pw(p, 2)) + (Z(-464) *
      k1 * pw(k, 9) * pw(p, 5)) + (Z(-412) * pw(k, 8) * pw(k1, 2) * pw(p, 4)) + (Z(-372) * p * pw(k, 6) * pw(k1,
      2)) + (Z(-347) * pw(k, 8) * pw(k1, 2) * pw(p, 2)) + (Z(-320) * p * pw(k, 2) * pw(k1, 2)) + (Z(-320) * p *
      pw(k, 3) * pw(k1, 3)) + (Z(-304) * pw(k, 5) * pw(k1, 3) * pw(p, 2)) + (Z(-288) * k1 * pw(k, 5) * pw(p, 3)) +
      (Z(-272) * p * pw(k, 7) * pw(k1, 3)) + (Z(-228) * pw(k, 6) * pw(k1, 2) * pw(p, 5)) + (Z(-199) * pw(k, 8) *
      pw(k1, 2) * pw(p, 6)) + (Z(-152) * k1 * pw(k, 7) * pw(p, 6)) + (Z(-140) * k1 * pw(k, 11) * pw(p, 3)) +
      (Z(-140) * k1 * pw(k, 11) * pw(p, 6)) + (Z(-136) * k1 * pw(k, 9) * pw(p, 7)) + (Z(-124) * pw(k, 4) * pw(k1,
      2) * pw(p, 4)) + (Z(-82) * pw(k, 9) * pw(k1, 3) * pw(p, 2)) + (Z(-81) * p * pw(k, 10) * pw(k1, 2)) + (Z(-80)
      * k1 * pw(k, 5) * pw(p, 2)) + (Z(-80) * pw(k, 7) * pw(k1, 3) * pw(p, 5)) + (Z(-75) * pw(k, 10) * pw(k1, 2) *
      pw(p, 7)) + (Z(-72) * pw(k, 5) * pw(k1, 3) * pw(p, 4)) + (Z(-64) * pw(k, 3) * pw(k1, 3) * pw(p, 3)) +
      (Z(-57) * pw(k, 10) * pw(k1, 2) * pw(p, 3)) + (Z(-43) * pw(k, 10) * pw(k1, 2) * pw(p, 5)) + (Z(-40) * k1 *
      pw(k, 5) * pw(p, 5)) + (Z(-40) * k1 * pw(k, 11) * pw(p, 8)) + (Z(-34) * pw(k, 9) * pw(k1, 3) * pw(p, 6)) +
      (Z(-32) * pw(k, 7) * pw(k1, 3) * pw(p, 3)) + (Z(-30) * k1 * p * pw(k, 11)) + (Z(-24) * p * pw(k, 4) * pw(k1,
      4)) + (Z(-24) * pw(k, 4) * pw(k1, 4) * pw(p, 3)) + (Z(-16) * pw(k, 2) * pw(k1, 4) * pw(p, 2)) + (Z(-16) *
      pw(k, 6) * pw(k1, 4) * pw(p, 2)) + (Z(-16) * pw(k, 6) * pw(k1, 4) * pw(p, 4)) + (Z(-15) * pw(k, 10) * pw(k1,
      2) * pw(p, 4)) + (Z(-4) * pw(k, 8) * pw(k1, 4) * pw(p, 3)) + (Z(-4) * pw(k, 8) * pw(k1, 4) * pw(p, 5)) +
      (Z(4) * p * pw(k, 6) * pw(k1, 4)) + (Z(4) * pw(k, 4) * pw(k1, 4) * pw(p, 4)) + (Z(4) * pw(k, 6) * pw(k1, 4)
      * pw(p, 5)) + (Z(6) * k1 * pw(k, 11) * pw(p, 9)) + (Z(6) * pw(k, 8) * pw(k1, 4) * pw(p, 4)) + (Z(10) * pw(k,
      9) * pw(k1, 3) * pw(p, 5)) + (Z(12) * pw(k, 9) * pw(k1, 3) * pw(p, 7)) + (Z(16) * k1 * pw(k, 7) * pw(p, 7))
      + (Z(16) * pw(k, 5) * pw(k1, 3) * pw(p, 5)) + (Z(16) * pw(k, 7) * pw(k1, 3) * pw(p, 6)) + (Z(17) * pw(k, 10)
      * pw(k1, 2) * pw(p, 8)) + (Z(22) * k1 * pw(k, 9) * pw(p, 8)) + (Z(24) * pw(k, 6) * pw(k1, 4) * pw(p, 3)) +
      (Z(32) * p * pw(k, 2) * pw(k1, 4)) + (Z(32) * pw(k, 6) * pw(k1, 2) * pw(p, 6)) + (Z(35) * pw(k, 8) * pw(k1,
      2) * pw(p, 7)) + (Z(40) * pw(k, 4) * pw(k1, 4) * pw(p, 2)) + (Z(40) * pw(k, 9) * pw(k1, 3) * pw(p, 4)) +
      (Z(56) * k1 * pw(k, 11) * pw(p, 5)) + (Z(74) * p * pw(k, 9) * pw(k1, 3)) + (Z(80) * pw(k, 7) * pw(k1, 3) *
      pw(p, 4)) + (Z(84) * k1 * pw(k, 11) * pw(p, 4)) + (Z(92) * k1 * pw(k, 11) * pw(p, 2)) + (Z(96) * k * p *
      pw(k1, 3)) + (Z(108) * k1 * pw(k, 11) * pw(p, 7)) + (Z(111) * pw(k, 10) * pw(k1, 2) * pw(p, 6)) + (Z(112) *
      k1 * pw(k, 7) * pw(p, 3)) + (Z(125) * pw(k, 10) * pw(k1, 2) * pw(p, 2)) + (Z(160) * pw(k, 2) * pw(k1, 2) *
      pw(p, 2)) + (Z(170) * k1 * pw(k, 9) * pw(p, 4)) + (Z(176) * pw(k, 7) * pw(k1, 3) * pw(p, 2)) + (Z(192) *
      pw(k, 3) * pw(k1, 3) * pw(p, 2)) + (Z(192) * pw(k, 5) * pw(k1, 3) * pw(p, 3)) + (Z(224) * k1 * pw(k, 5) *
      pw(p, 4)) + (Z(257) * p * pw(k, 8) * pw(k1, 2)) + (Z(272) * k1 * p * pw(k, 9)) + (Z(328) * k1 * p * pw(k,
      5)) + (Z(328) * k1 * pw(k, 9) * pw(p, 3)) + (Z(333) * pw(k, 8) * pw(k1, 2) * pw(p, 3)) + (Z(358) * k1 *
      pw(k, 9) * pw(p, 6)) + (Z(368) * p * pw(k, 5) * pw(k1, 3)) + (Z(407) * pw(k, 8) * pw(k1, 2) * pw(p, 5)) +
      (Z(448) * k1 * pw(k, 7) * pw(p, 5)) + (Z(536) * k1 * pw(k, 7) * pw(p, 2)) + (Z(544) * pw(k, 4) * pw(k1, 2) *
      pw(p, 3)) + (Z(560) * p * pw(k, 4) * pw(k1, 2)) + (Z(636) * pw(k, 6) * pw(k1, 2) * pw(p, 4)) + (Z(840) *
      pw(k, 6) * pw(k1, 2) * pw(p, 2)));
  a[15] = (Z(-2) * k * (Z(-1) + p) * (Z(-2) + (pw(k, 2) * pw(p, 2)) + (Z(-1) * p * pw(k, 2))) * (Z(2) + (Z(-1) * pw(k,
      2)) + (p * pw(k, 2))) * (k1 + (Z(-1) * k) + (k * p)) * (Z(1) + pw(k1, 2) + (Z(-2) * k * k1) + (Z(2) * k * k1
      * p)) * (Z(4) + (Z(-8) * pw(k, 2)) + (Z(2) * pw(k, 4)) + (pw(k, 4) * pw(p, 3)) + (Z(-3) * p * pw(k, 4))));
  a[16] = (k * pw((Z(4) + (Z(-8) * pw(k, 2)) + (pw(k, 4) * pw((Z(-1) + p), 2) * (Z(2) + p))), 2) * (Z(1) + (k * k1 *
      (Z(-1) + p))) * (Z(-1) + p) * (k1 + (k * (Z(-1) + p))));
  return a;
}

std::vector<BigInt> g3_table(const BigInt& k1, const BigInt& k, const BigInt& p) {
  (void)k1;
  std::vector<BigInt> b(16);
  b[0] = (Z(-1) * pw(k, 6) * (Z(1) + (pw(k, 2) * (Z(-1) + p))) * (Z(-2) + p + (pw(k, 2) * (Z(2) + pw(p, 2) + (Z(-2) *
      p)))));
  b[1] = (pw(k, 6) * (Z(2) + (Z(-1) * p) + (Z(-4) * pw(k, 2)) + (Z(2) * pw(k, 4)) + (Z(-1) * p * pw(k, 2)) + (Z(-5) *
      pw(k, 4) * pw(p, 2)) + (Z(2) * p * pw(k, 4)) + (Z(2) * pw(k, 2) * pw(p, 2)) + (Z(3) * pw(k, 4) * pw(p, 3))));
  b[2] = (Z(-1) * pw(k, 6) * (Z(12) + (Z(-26) * p) + (Z(-24) * pw(k, 2)) + (Z(10) * pw(p, 2)) + (Z(12) * pw(k, 4)) +
      (Z(-51) * pw(k, 2) * pw(p, 2)) + (Z(-35) * p * pw(k, 4)) + (Z(-19) * pw(k, 4) * pw(p, 3)) + (Z(6) * pw(k, 4)
      * pw(p, 4)) + (Z(16) * pw(k, 2) * pw(p, 3)) + (Z(38) * pw(k, 4) * pw(p, 2)) + (Z(61) * p * pw(k, 2))));
  b[3] = (pw(k, 6) * (Z(-12) + (Z(-12) * pw(k, 4)) + (Z(-2) * pw(p, 2)) + (Z(14) * p) + (Z(24) * pw(k, 2)) + (Z(-41)
      * pw(k, 4) * pw(p, 3)) + (Z(-35) * pw(k, 2) * pw(p, 2)) + (Z(-19) * p * pw(k, 2)) + (Z(5) * p * pw(k, 4)) +
      (Z(18) * pw(k, 4) * pw(p, 4)) + (Z(24) * pw(k, 2) * pw(p, 3)) + (Z(36) * pw(k, 4) * pw(p, 2))));
  b[4] = (Z(-1) * pw(k, 4) * (Z(16) + (Z(-62) * pw(k, 2)) + (Z(-30) * pw(k, 6)) + (Z(-8) * p) + (Z(76) * pw(k, 4)) +
      (Z(-256) * p * pw(k, 4)) + (Z(-187) * pw(k, 4) * pw(p, 3)) + (Z(-178) * pw(k, 6) * pw(p, 2)) + (Z(-140) *
      pw(k, 2) * pw(p, 2)) + (Z(-47) * pw(k, 6) * pw(p, 4)) + (Z(15) * pw(k, 6) * pw(p, 5)) + (Z(39) * pw(k, 2) *
      pw(p, 3)) + (Z(50) * pw(k, 4) * pw(p, 4)) + (Z(121) * p * pw(k, 6)) + (Z(124) * pw(k, 6) * pw(p, 3)) +
      (Z(143) * p * pw(k, 2)) + (Z(324) * pw(k, 4) * pw(p, 2))));
  b[5] = (pw(k, 4) * (Z(-16) + (Z(-76) * pw(k, 4)) + (Z(8) * p) + (Z(30) * pw(k, 6)) + (Z(62) * pw(k, 2)) + (Z(-207)
      * pw(k, 4) * pw(p, 3)) + (Z(-129) * pw(k, 6) * pw(p, 4)) + (Z(-67) * p * pw(k, 2)) + (Z(-57) * p * pw(k, 6))
      + (Z(-54) * pw(k, 6) * pw(p, 2)) + (Z(-4) * pw(k, 2) * pw(p, 2)) + (Z(17) * pw(k, 2) * pw(p, 3)) + (Z(45) *
      pw(k, 6) * pw(p, 5)) + (Z(76) * pw(k, 4) * pw(p, 2)) + (Z(90) * pw(k, 4) * pw(p, 4)) + (Z(116) * p * pw(k,
      4)) + (Z(166) * pw(k, 6) * pw(p, 3))));
  b[6] = (Z(-1) * pw(k, 4) * (Z(-64) + (Z(-144) * pw(k, 4)) + (Z(-56) * pw(p, 2)) + (Z(40) * pw(k, 6)) + (Z(144) * p)
      + (Z(168) * pw(k, 2)) + (Z(-962) * pw(k, 4) * pw(p, 2)) + (Z(-540) * p * pw(k, 2)) + (Z(-395) * pw(k, 6) *
      pw(p, 3)) + (Z(-360) * pw(k, 2) * pw(p, 3)) + (Z(-329) * pw(k, 4) * pw(p, 4)) + (Z(-218) * p * pw(k, 6)) +
      (Z(-55) * pw(k, 6) * pw(p, 5)) + (Z(20) * pw(k, 6) * pw(p, 6)) + (Z(76) * pw(k, 2) * pw(p, 4)) + (Z(80) *
      pw(k, 4) * pw(p, 5)) + (Z(184) * pw(k, 6) * pw(p, 4)) + (Z(424) * pw(k, 6) * pw(p, 2)) + (Z(614) * p * pw(k,
      4)) + (Z(616) * pw(k, 2) * pw(p, 2)) + (Z(757) * pw(k, 4) * pw(p, 3))));
  b[7] = (pw(k, 4) * (Z(64) + (Z(-168) * pw(k, 2)) + (Z(-96) * p) + (Z(-40) * pw(k, 6)) + (Z(8) * pw(p, 2)) + (Z(144)
      * pw(k, 4)) + (Z(-497) * pw(k, 4) * pw(p, 4)) + (Z(-346) * p * pw(k, 4)) + (Z(-243) * pw(k, 6) * pw(p, 3)) +
      (Z(-205) * pw(k, 6) * pw(p, 5)) + (Z(-188) * pw(k, 2) * pw(p, 3)) + (Z(-56) * pw(k, 6) * pw(p, 2)) + (Z(22)
      * pw(k, 4) * pw(p, 2)) + (Z(44) * pw(k, 2) * pw(p, 2)) + (Z(60) * pw(k, 6) * pw(p, 6)) + (Z(68) * pw(k, 2) *
      pw(p, 4)) + (Z(142) * p * pw(k, 6)) + (Z(160) * pw(k, 4) * pw(p, 5)) + (Z(300) * p * pw(k, 2)) + (Z(342) *
      pw(k, 6) * pw(p, 4)) + (Z(485) * pw(k, 4) * pw(p, 3))));
  b[8] = (Z(-1) * pw(k, 2) * (Z(-32) + (Z(-254) * pw(k, 4)) + (Z(-30) * pw(k, 8)) + (Z(16) * p) + (Z(156) * pw(k, 6))
      + (Z(160) * pw(k, 2)) + (Z(-1624) * pw(k, 4) * pw(p, 2)) + (Z(-1604) * pw(k, 6) * pw(p, 3)) + (Z(-885) * p *
      pw(k, 6)) + (Z(-563) * pw(k, 8) * pw(p, 2)) + (Z(-480) * p * pw(k, 2)) + (Z(-466) * pw(k, 4) * pw(p, 4)) +
      (Z(-426) * pw(k, 8) * pw(p, 4)) + (Z(-291) * pw(k, 6) * pw(p, 5)) + (Z(-136) * pw(k, 2) * pw(p, 3)) +
      (Z(-25) * pw(k, 8) * pw(p, 6)) + (Z(15) * pw(k, 8) * pw(p, 7)) + (Z(70) * pw(k, 6) * pw(p, 6)) + (Z(79) *
      pw(k, 4) * pw(p, 5)) + (Z(116) * pw(k, 8) * pw(p, 5)) + (Z(222) * p * pw(k, 8)) + (Z(496) * pw(k, 2) * pw(p,
      2)) + (Z(691) * pw(k, 8) * pw(p, 3)) + (Z(844) * pw(k, 6) * pw(p, 4)) + (Z(1127) * p * pw(k, 4)) + (Z(1130)
      * pw(k, 4) * pw(p, 3)) + (Z(1694) * pw(k, 6) * pw(p, 2))));
  b[9] = (pw(k, 2) * (Z(32) + (Z(-160) * pw(k, 2)) + (Z(-156) * pw(k, 6)) + (Z(-32) * p) + (Z(30) * pw(k, 8)) +
      (Z(254) * pw(k, 4)) + (Z(-687) * p * pw(k, 4)) + (Z(-583) * pw(k, 6) * pw(p, 5)) + (Z(-460) * pw(k, 6) *
      pw(p, 3)) + (Z(-430) * pw(k, 4) * pw(p, 4)) + (Z(-402) * pw(k, 6) * pw(p, 2)) + (Z(-390) * pw(k, 8) * pw(p,
      4)) + (Z(-175) * pw(k, 8) * pw(p, 6)) + (Z(-168) * p * pw(k, 8)) + (Z(-72) * pw(k, 2) * pw(p, 3)) + (Z(-48)
      * pw(k, 2) * pw(p, 2)) + (Z(45) * pw(k, 8) * pw(p, 7)) + (Z(73) * pw(k, 8) * pw(p, 3)) + (Z(97) * pw(k, 4) *
      pw(p, 5)) + (Z(150) * pw(k, 6) * pw(p, 6)) + (Z(200) * pw(k, 4) * pw(p, 2)) + (Z(227) * pw(k, 8) * pw(p, 2))
      + (Z(304) * p * pw(k, 2)) + (Z(358) * pw(k, 8) * pw(p, 5)) + (Z(542) * pw(k, 4) * pw(p, 3)) + (Z(583) * p *
      pw(k, 6)) + (Z(868) * pw(k, 6) * pw(p, 4))));
  b[10] = (Z(-1) * pw(k, 2) * (Z(64) + (Z(-208) * p) + (Z(-192) * pw(k, 2)) + (Z(-88) * pw(k, 6)) + (Z(12) * pw(k, 8))
      + (Z(80) * pw(p, 2)) + (Z(204) * pw(k, 4)) + (Z(-1980) * pw(k, 4) * pw(p, 3)) + (Z(-1755) * pw(k, 6) * pw(p,
      2)) + (Z(-1314) * p * pw(k, 4)) + (Z(-1224) * pw(k, 6) * pw(p, 4)) + (Z(-1152) * pw(k, 2) * pw(p, 2)) +
      (Z(-667) * pw(k, 8) * pw(p, 3)) + (Z(-290) * pw(k, 4) * pw(p, 5)) + (Z(-205) * pw(k, 8) * pw(p, 5)) +
      (Z(-136) * pw(k, 2) * pw(p, 4)) + (Z(-127) * p * pw(k, 8)) + (Z(-109) * pw(k, 6) * pw(p, 6)) + (Z(-2) *
      pw(k, 8) * pw(p, 6)) + (Z(6) * pw(k, 8) * pw(p, 8)) + (Z(7) * pw(k, 8) * pw(p, 7)) + (Z(32) * pw(k, 6) *
      pw(p, 7)) + (Z(42) * pw(k, 4) * pw(p, 6)) + (Z(399) * pw(k, 6) * pw(p, 5)) + (Z(418) * pw(k, 8) * pw(p, 2))
      + (Z(558) * pw(k, 8) * pw(p, 4)) + (Z(680) * pw(k, 2) * pw(p, 3)) + (Z(721) * p * pw(k, 6)) + (Z(904) *
      pw(k, 4) * pw(p, 4)) + (Z(928) * p * pw(k, 2)) + (Z(2024) * pw(k, 6) * pw(p, 3)) + (Z(2370) * pw(k, 4) *
      pw(p, 2))));
  b[11] = (pw(k, 2) * (Z(-64) + (Z(-204) * pw(k, 4)) + (Z(-32) * pw(p, 2)) + (Z(-12) * pw(k, 8)) + (Z(88) * pw(k, 6))
      + (Z(160) * p) + (Z(192) * pw(k, 2)) + (Z(-674) * pw(k, 4) * pw(p, 2)) + (Z(-664) * pw(k, 6) * pw(p, 4)) +
      (Z(-592) * p * pw(k, 2)) + (Z(-527) * p * pw(k, 6)) + (Z(-370) * pw(k, 4) * pw(p, 5)) + (Z(-356) * pw(k, 4)
      * pw(p, 3)) + (Z(-333) * pw(k, 6) * pw(p, 6)) + (Z(-285) * pw(k, 8) * pw(p, 5)) + (Z(-240) * pw(k, 8) *
      pw(p, 2)) + (Z(-136) * pw(k, 2) * pw(p, 4)) + (Z(-75) * pw(k, 8) * pw(p, 7)) + (Z(-16) * pw(k, 6) * pw(p,
      3)) + (Z(18) * pw(k, 8) * pw(p, 8)) + (Z(62) * pw(k, 4) * pw(p, 6)) + (Z(72) * pw(k, 6) * pw(p, 7)) +
      (Z(105) * p * pw(k, 8)) + (Z(143) * pw(k, 8) * pw(p, 3)) + (Z(162) * pw(k, 8) * pw(p, 4)) + (Z(176) * pw(k,
      2) * pw(p, 2)) + (Z(184) * pw(k, 8) * pw(p, 6)) + (Z(232) * pw(k, 2) * pw(p, 3)) + (Z(655) * pw(k, 6) *
      pw(p, 5)) + (Z(725) * pw(k, 6) * pw(p, 2)) + (Z(752) * pw(k, 4) * pw(p, 4)) + (Z(854) * p * pw(k, 4))));
  b[12] = ((Z(-80) * pw(k, 4)) + (Z(-20) * pw(k, 8)) + (Z(2) * pw(k, 10)) + (Z(16) * p) + (Z(32) * pw(k, 2)) + (Z(66)
      * pw(k, 6)) + (Z(-1) * pw(k, 10) * pw(p, 9)) + (Z(-1839) * pw(k, 6) * pw(p, 3)) + (Z(-1392) * pw(k, 4) *
      pw(p, 2)) + (Z(-1038) * pw(k, 8) * pw(p, 4)) + (Z(-948) * pw(k, 8) * pw(p, 2)) + (Z(-777) * p * pw(k, 6)) +
      (Z(-352) * p * pw(k, 2)) + (Z(-336) * pw(k, 4) * pw(p, 4)) + (Z(-328) * pw(k, 10) * pw(p, 3)) + (Z(-239) *
      pw(k, 6) * pw(p, 5)) + (Z(-206) * pw(k, 10) * pw(p, 5)) + (Z(-96) * pw(k, 2) * pw(p, 3)) + (Z(-37) * p *
      pw(k, 10)) + (Z(-12) * pw(k, 8) * pw(p, 6)) + (Z(-11) * pw(k, 10) * pw(p, 8)) + (Z(-9) * pw(k, 6) * pw(p,
      7)) + (Z(-6) * pw(k, 8) * pw(p, 8)) + (Z(-3) * pw(k, 8) * pw(p, 7)) + (Z(18) * pw(k, 10) * pw(p, 6)) +
      (Z(36) * pw(k, 10) * pw(p, 7)) + (Z(48) * pw(k, 4) * pw(p, 5)) + (Z(64) * pw(k, 6) * pw(p, 6)) + (Z(160) *
      pw(k, 10) * pw(p, 2)) + (Z(294) * p * pw(k, 8)) + (Z(348) * pw(k, 8) * pw(p, 5)) + (Z(367) * pw(k, 10) *
      pw(p, 4)) + (Z(400) * pw(k, 2) * pw(p, 2)) + (Z(856) * p * pw(k, 4)) + (Z(904) * pw(k, 4) * pw(p, 3)) +
      (Z(914) * pw(k, 6) * pw(p, 4)) + (Z(1385) * pw(k, 8) * pw(p, 3)) + (Z(1820) * pw(k, 6) * pw(p, 2)));
  b[13] = ((Z(-80) * pw(k, 4)) + (Z(-20) * pw(k, 8)) + (Z(2) * pw(k, 10)) + (Z(32) * pw(k, 2)) + (Z(48) * p) + (Z(66)
      * pw(k, 6)) + (Z(-525) * p * pw(k, 6)) + (Z(-516) * pw(k, 8) * pw(p, 2)) + (Z(-400) * pw(k, 4) * pw(p, 2)) +
      (Z(-350) * pw(k, 6) * pw(p, 4)) + (Z(-296) * pw(k, 8) * pw(p, 5)) + (Z(-240) * p * pw(k, 2)) + (Z(-143) *
      pw(k, 6) * pw(p, 3)) + (Z(-138) * pw(k, 10) * pw(p, 3)) + (Z(-120) * pw(k, 4) * pw(p, 3)) + (Z(-112) * pw(k,
      6) * pw(p, 6)) + (Z(-86) * pw(k, 10) * pw(p, 6)) + (Z(-73) * pw(k, 8) * pw(p, 7)) + (Z(-64) * pw(k, 4) *
      pw(p, 5)) + (Z(-33) * p * pw(k, 10)) + (Z(-11) * pw(k, 10) * pw(p, 8)) + (Z(3) * pw(k, 10) * pw(p, 9)) +
      (Z(14) * pw(k, 8) * pw(p, 8)) + (Z(15) * pw(k, 6) * pw(p, 7)) + (Z(23) * pw(k, 10) * pw(p, 4)) + (Z(34) *
      pw(k, 10) * pw(p, 7)) + (Z(48) * pw(k, 2) * pw(p, 2)) + (Z(48) * pw(k, 2) * pw(p, 3)) + (Z(94) * pw(k, 10) *
      pw(p, 5)) + (Z(112) * pw(k, 10) * pw(p, 2)) + (Z(158) * pw(k, 8) * pw(p, 4)) + (Z(180) * pw(k, 8) * pw(p,
      6)) + (Z(208) * pw(k, 4) * pw(p, 4)) + (Z(230) * p * pw(k, 8)) + (Z(317) * pw(k, 6) * pw(p, 5)) + (Z(323) *
      pw(k, 8) * pw(p, 3)) + (Z(520) * p * pw(k, 4)) + (Z(732) * pw(k, 6) * pw(p, 2)));
  b[14] = (Z(-1) * p * (Z(-1) + p) * (Z(4) + (Z(-8) * pw(k, 2)) + (Z(2) * pw(k, 4)) + (pw(k, 4) * pw(p, 3)) + (Z(-3) *
      p * pw(k, 4))) * (Z(-12) + (Z(-14) * pw(k, 4)) + (Z(2) * pw(k, 6)) + (Z(24) * pw(k, 2)) + (Z(-28) * p *
      pw(k, 2)) + (Z(-24) * pw(k, 4) * pw(p, 2)) + (Z(-9) * pw(k, 6) * pw(p, 3)) + (Z(-7) * p * pw(k, 6)) + (Z(3)
      * pw(k, 6) * pw(p, 4)) + (Z(4) * pw(k, 2) * pw(p, 2)) + (Z(9) * pw(k, 4) * pw(p, 3)) + (Z(11) * pw(k, 6) *
      pw(p, 2)) + (Z(29) * p * pw(k, 4))));
  b[15] = (p * pw((Z(4) + (Z(-8) * pw(k, 2)) + (pw(k, 4) * pw((Z(-1) + p), 2) * (Z(2) + p))), 2) * (Z(1) + (pw(k, 2) *
      (Z(-1) + p))) * (Z(-1) + p));
  return b;
}

}  // namespace einsu::detail
