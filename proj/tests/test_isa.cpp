#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "arv/charset.hpp"
#include "arv/isa.hpp"

#include <random>

using namespace arv;

namespace {

InstrWord from_str(const char* s) {
  std::vector<uint8_t> b(s, s + strlen(s));
  return InstrWord::from_bytes(b);
}

}  // namespace

TEST_CASE("width classification") {
  CHECK(classify_width(0x13) == WidthClass::W32);  // bits 10011
  CHECK(classify_width(0x42) == WidthClass::W16);  // bits ...10
  CHECK(classify_width(0x7F) == WidthClass::Other);
  CHECK(classify_width(0x00) == WidthClass::W16);
  CHECK(classify_width(0x6F) == WidthClass::W32);
}

TEST_CASE("7OOT decodes to lui t5,0x544f4") {
  auto d = decode(from_str("7OOT"));
  REQUIRE(d.has_value());
  CHECK(d->mn == Mn::lui);
  CHECK(d->rd == 30);  // t5
  CHECK(d->imm == 0x544F4);
  CHECK(render(*d) == "lui t5,0x544f4");
}

TEST_CASE("WOOT is undefined") {
  auto d = decode(from_str("WOOT"));
  CHECK(!d.has_value());
}

TEST_CASE("canonical nop") {
  auto d = decode(InstrWord::word(0x00000013));
  REQUIRE(d.has_value());
  CHECK(d->mn == Mn::addi);
  CHECK(d->rd == 0);
  CHECK(d->rs1 == 0);
  CHECK(d->imm == 0);
  CHECK(d->hint);

  auto w = encode(mk_itype(Mn::addi, 0, 0, 0), 4);
  REQUIRE(w.has_value());
  CHECK(w->value == 0x00000013u);
}

TEST_CASE("encode lui example") {
  auto w = encode(mk_lui(30, 0x544F4), 4);
  REQUIRE(w.has_value());
  CHECK(w->value == 0x544F4F37u);
  auto b = w->bytes();
  CHECK(b[0] == '7');
  CHECK(b[1] == 'O');
  CHECK(b[2] == 'O');
  CHECK(b[3] == 'T');
}

TEST_CASE("c.li immediate out of range is not encodable") {
  auto d = mk_itype(Mn::c_li, 5, -1, 32);
  CHECK(!encode(d).has_value());
  d.imm = 31;
  CHECK(encode(d).has_value());
  d.imm = -32;
  CHECK(encode(d).has_value());
  d.imm = -33;
  CHECK(!encode(d).has_value());
}

TEST_CASE("known hand-checked encodings") {
  // c.addi16sp sp,464 = "ya"; c.addi16sp sp,448 = "9a"
  DecodedInstr a16;
  a16.mn = Mn::c_addi16sp; a16.rd = 2; a16.rs1 = 2;
  a16.imm = 464; a16.has_imm = true;
  auto w = encode(a16);
  REQUIRE(w.has_value());
  CHECK(w->bytes()[0] == 'y');
  CHECK(w->bytes()[1] == 'a');
  a16.imm = 448;
  w = encode(a16);
  REQUIRE(w.has_value());
  CHECK(w->bytes()[0] == '9');
  CHECK(w->bytes()[1] == 'a');

  // addi sp,sp,16 = "Aa"
  a16.imm = 16;
  w = encode(a16);
  REQUIRE(w.has_value());
  CHECK(w->bytes()[0] == 'A');
  CHECK(w->bytes()[1] == 'a');

  // sd t1,1920(sp) = "#0ax"
  auto sd = encode(mk_store(Mn::sd, 2, 6, 1920), 4);
  REQUIRE(sd.has_value());
  auto sb = sd->bytes();
  CHECK(sb[0] == '#');
  CHECK(sb[1] == '0');
  CHECK(sb[2] == 'a');
  CHECK(sb[3] == 'x');

  // sd s4,1922(sp) = "#1Ay"
  sd = encode(mk_store(Mn::sd, 2, 20, 1922), 4);
  REQUIRE(sd.has_value());
  sb = sd->bytes();
  CHECK(sb[0] == '#');
  CHECK(sb[1] == '1');
  CHECK(sb[2] == 'A');
  CHECK(sb[3] == 'y');

  // fence.i word
  auto fi = encode(DecodedInstr{.mn = Mn::fence_i});
  REQUIRE(fi.has_value());
  CHECK(fi->value == 0x0000100Fu);

  // j .+0xc: byte sequence 31 A0 (hex written in byte order)
  DecodedInstr cj;
  cj.mn = Mn::c_j; cj.imm = 0xc; cj.has_imm = true;
  auto cw = encode(cj);
  REQUIRE(cw.has_value());
  CHECK(cw->bytes()[0] == 0x31);
  CHECK(cw->bytes()[1] == 0xA0);

  // "3Z0A" = sra s4,zero,s3 and "3QCA" = sra sp,t1,s4
  auto sra1 = decode(from_str("3Z0A"));
  REQUIRE(sra1.has_value());
  CHECK(sra1->mn == Mn::sra);
  CHECK(sra1->rd == 20);
  CHECK(sra1->rs1 == 0);
  CHECK(sra1->rs2 == 19);
  auto sra2 = decode(from_str("3QCA"));
  REQUIRE(sra2.has_value());
  CHECK(sra2->mn == Mn::sra);
  CHECK(sra2->rd == 2);
  CHECK(sra2->rs1 == 6);
  CHECK(sra2->rs2 == 20);

  // "o#0#" = jal t1,.+10802
  auto j = decode(from_str("o#0#"));
  REQUIRE(j.has_value());
  CHECK(j->mn == Mn::jal);
  CHECK(j->rd == 6);
  CHECK(j->imm == 10802);

  // FPU-enable gadget: c.lui t2,0x2 then csrrw zero,mstatus,t2
  auto g1 = decode(InstrWord::half(0x6389));
  REQUIRE(g1.has_value());
  CHECK(g1->mn == Mn::c_lui);
  CHECK(g1->rd == 7);
  CHECK(g1->imm == 2);
  auto g2 = decode(InstrWord::word(0x30039073));
  REQUIRE(g2.has_value());
  CHECK(g2->mn == Mn::csrrw);
  CHECK(g2->rd == 0);
  CHECK(g2->rs1 == 7);
  CHECK(g2->csr == 0x300);

  // "yS" = c.li t1,-2 (appendix nop sled filler)
  auto li = decode(from_str("yS"));
  REQUIRE(li.has_value());
  CHECK(li->mn == Mn::c_li);
  CHECK(li->rd == 6);
  CHECK(li->imm == -2);

  // "s0A4" = csrrc zero,mip,sp
  auto cs = decode(from_str("s0A4"));
  REQUIRE(cs.has_value());
  CHECK(cs->mn == Mn::csrrc);
  CHECK(cs->rd == 0);
  CHECK(cs->rs1 == 2);
  CHECK(cs->csr == 0x344);
}

TEST_CASE("decode is total over the charset word spaces") {
  // Never crash, and width partition agrees with classify_width.
  auto cs = Charset::of(Variant::Tick);
  std::string bytes = cs.bytes();
  int valid16 = 0;
  for (char a : bytes)
    for (char b : bytes) {
      uint8_t ba = uint8_t(a);
      if (classify_width(ba) != WidthClass::W16) continue;
      uint8_t arr[2] = {ba, uint8_t(b)};
      auto d = decode(InstrWord::from_bytes(arr));
      valid16 += d.has_value();
    }
  CHECK(valid16 > 0);

  std::mt19937 rng(7);
  std::uniform_int_distribution<size_t> pick(0, bytes.size() - 1);
  int valid32 = 0;
  for (int i = 0; i < 200000; ++i) {
    uint8_t arr[4] = {uint8_t(bytes[pick(rng)]), uint8_t(bytes[pick(rng)]),
                      uint8_t(bytes[pick(rng)]), uint8_t(bytes[pick(rng)])};
    if (classify_width(arr[0]) != WidthClass::W32) continue;
    auto d = decode(InstrWord::from_bytes(arr));
    valid32 += d.has_value();
  }
  CHECK(valid32 > 0);
}

TEST_CASE("round trip: decode(encode(d)) == d over random valid words") {
  std::mt19937 rng(42);
  int checked32 = 0, checked16 = 0;
  while (checked32 < 20000) {
    uint32_t v = rng();
    v = (v & ~3u) | 3u;
    if ((v & 0x1C) == 0x1C) continue;
    auto d = decode(InstrWord::word(v));
    if (!d) continue;
    auto w = encode(*d, 4);
    REQUIRE_MESSAGE(w.has_value(), render(*d) << " value=" << v);
    CHECK_MESSAGE(w->value == v, render(*d));
    ++checked32;
  }
  while (checked16 < 20000) {
    uint16_t v = uint16_t(rng());
    if ((v & 3) == 3) continue;
    auto d = decode(InstrWord::half(v));
    if (!d) continue;
    auto w = encode(*d, 2);
    REQUIRE_MESSAGE(w.has_value(), render(*d) << " value=" << v);
    CHECK_MESSAGE(w->value == v, render(*d));
    ++checked16;
  }
}

TEST_CASE("charset membership") {
  auto alnum = Charset::of(Variant::Alnum);
  auto hash = Charset::of(Variant::Hash);
  auto slash = Charset::of(Variant::Slash);
  auto tick = Charset::of(Variant::Tick);

  CHECK(alnum.size() == 62);
  CHECK(hash.size() == 63);

  const uint8_t woot[] = {'7', 'O', 'O', 'T'};
  CHECK(is_charset_valid(woot, alnum));
  const uint8_t oh[] = {'o', '#', '0', '#'};
  CHECK(is_charset_valid(oh, hash));
  CHECK(!is_charset_valid(oh, alnum));
  CHECK(slash.contains(0x2F));
  CHECK(!tick.contains(0x2F));
  CHECK(tick.contains(0x27));
}
