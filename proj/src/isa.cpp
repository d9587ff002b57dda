#include "arv/isa.hpp"

#include "arv/charset.hpp"

#include <cassert>
#include <cstdio>

namespace arv {

namespace {

constexpr int64_t sext(uint64_t v, int bits) {
  uint64_t m = 1ull << (bits - 1);
  return int64_t((v ^ m) - m);
}

constexpr uint32_t bit(uint32_t v, int pos) { return (v >> pos) & 1; }
constexpr uint32_t bits(uint32_t v, int hi, int lo) {
  return (v >> lo) & ((1u << (hi - lo + 1)) - 1);
}

}  // namespace

const char* mnemonic_name(Mn m) {
  switch (m) {
    case Mn::lui: return "lui";
    case Mn::auipc: return "auipc";
    case Mn::jal: return "jal";
    case Mn::jalr: return "jalr";
    case Mn::beq: return "beq";
    case Mn::bne: return "bne";
    case Mn::blt: return "blt";
    case Mn::bge: return "bge";
    case Mn::bltu: return "bltu";
    case Mn::bgeu: return "bgeu";
    case Mn::lb: return "lb";
    case Mn::lh: return "lh";
    case Mn::lw: return "lw";
    case Mn::ld: return "ld";
    case Mn::lbu: return "lbu";
    case Mn::lhu: return "lhu";
    case Mn::lwu: return "lwu";
    case Mn::sb: return "sb";
    case Mn::sh: return "sh";
    case Mn::sw: return "sw";
    case Mn::sd: return "sd";
    case Mn::addi: return "addi";
    case Mn::slti: return "slti";
    case Mn::sltiu: return "sltiu";
    case Mn::xori: return "xori";
    case Mn::ori: return "ori";
    case Mn::andi: return "andi";
    case Mn::slli: return "slli";
    case Mn::srli: return "srli";
    case Mn::srai: return "srai";
    case Mn::add: return "add";
    case Mn::sub: return "sub";
    case Mn::sll: return "sll";
    case Mn::slt: return "slt";
    case Mn::sltu: return "sltu";
    case Mn::xorr: return "xor";
    case Mn::srl: return "srl";
    case Mn::sra: return "sra";
    case Mn::orr: return "or";
    case Mn::andr: return "and";
    case Mn::addiw: return "addiw";
    case Mn::slliw: return "slliw";
    case Mn::srliw: return "srliw";
    case Mn::sraiw: return "sraiw";
    case Mn::addw: return "addw";
    case Mn::subw: return "subw";
    case Mn::sllw: return "sllw";
    case Mn::srlw: return "srlw";
    case Mn::sraw: return "sraw";
    case Mn::fence: return "fence";
    case Mn::fence_i: return "fence.i";
    case Mn::ecall: return "ecall";
    case Mn::ebreak: return "ebreak";
    case Mn::csrrw: return "csrrw";
    case Mn::csrrs: return "csrrs";
    case Mn::csrrc: return "csrrc";
    case Mn::csrrwi: return "csrrwi";
    case Mn::csrrsi: return "csrrsi";
    case Mn::csrrci: return "csrrci";
    case Mn::mul: return "mul";
    case Mn::mulh: return "mulh";
    case Mn::mulhsu: return "mulhsu";
    case Mn::mulhu: return "mulhu";
    case Mn::divi: return "div";
    case Mn::divu: return "divu";
    case Mn::rem: return "rem";
    case Mn::remu: return "remu";
    case Mn::mulw: return "mulw";
    case Mn::divw: return "divw";
    case Mn::divuw: return "divuw";
    case Mn::remw: return "remw";
    case Mn::remuw: return "remuw";
    case Mn::lr_w: return "lr.w";
    case Mn::sc_w: return "sc.w";
    case Mn::amoswap_w: return "amoswap.w";
    case Mn::amoadd_w: return "amoadd.w";
    case Mn::amoxor_w: return "amoxor.w";
    case Mn::amoand_w: return "amoand.w";
    case Mn::amoor_w: return "amoor.w";
    case Mn::amomin_w: return "amomin.w";
    case Mn::amomax_w: return "amomax.w";
    case Mn::amominu_w: return "amominu.w";
    case Mn::amomaxu_w: return "amomaxu.w";
    case Mn::lr_d: return "lr.d";
    case Mn::sc_d: return "sc.d";
    case Mn::amoswap_d: return "amoswap.d";
    case Mn::amoadd_d: return "amoadd.d";
    case Mn::amoxor_d: return "amoxor.d";
    case Mn::amoand_d: return "amoand.d";
    case Mn::amoor_d: return "amoor.d";
    case Mn::amomin_d: return "amomin.d";
    case Mn::amomax_d: return "amomax.d";
    case Mn::amominu_d: return "amominu.d";
    case Mn::amomaxu_d: return "amomaxu.d";
    case Mn::flw: return "flw";
    case Mn::fsw: return "fsw";
    case Mn::fmadd_s: return "fmadd.s";
    case Mn::fmsub_s: return "fmsub.s";
    case Mn::fnmsub_s: return "fnmsub.s";
    case Mn::fnmadd_s: return "fnmadd.s";
    case Mn::fadd_s: return "fadd.s";
    case Mn::fsub_s: return "fsub.s";
    case Mn::fmul_s: return "fmul.s";
    case Mn::fdiv_s: return "fdiv.s";
    case Mn::fsqrt_s: return "fsqrt.s";
    case Mn::fsgnj_s: return "fsgnj.s";
    case Mn::fsgnjn_s: return "fsgnjn.s";
    case Mn::fsgnjx_s: return "fsgnjx.s";
    case Mn::fmin_s: return "fmin.s";
    case Mn::fmax_s: return "fmax.s";
    case Mn::fcvt_w_s: return "fcvt.w.s";
    case Mn::fcvt_wu_s: return "fcvt.wu.s";
    case Mn::fcvt_l_s: return "fcvt.l.s";
    case Mn::fcvt_lu_s: return "fcvt.lu.s";
    case Mn::fcvt_s_w: return "fcvt.s.w";
    case Mn::fcvt_s_wu: return "fcvt.s.wu";
    case Mn::fcvt_s_l: return "fcvt.s.l";
    case Mn::fcvt_s_lu: return "fcvt.s.lu";
    case Mn::fmv_x_w: return "fmv.x.w";
    case Mn::fmv_w_x: return "fmv.w.x";
    case Mn::feq_s: return "feq.s";
    case Mn::flt_s: return "flt.s";
    case Mn::fle_s: return "fle.s";
    case Mn::fclass_s: return "fclass.s";
    case Mn::fld: return "fld";
    case Mn::fsd: return "fsd";
    case Mn::fmadd_d: return "fmadd.d";
    case Mn::fmsub_d: return "fmsub.d";
    case Mn::fnmsub_d: return "fnmsub.d";
    case Mn::fnmadd_d: return "fnmadd.d";
    case Mn::fadd_d: return "fadd.d";
    case Mn::fsub_d: return "fsub.d";
    case Mn::fmul_d: return "fmul.d";
    case Mn::fdiv_d: return "fdiv.d";
    case Mn::fsqrt_d: return "fsqrt.d";
    case Mn::fsgnj_d: return "fsgnj.d";
    case Mn::fsgnjn_d: return "fsgnjn.d";
    case Mn::fsgnjx_d: return "fsgnjx.d";
    case Mn::fmin_d: return "fmin.d";
    case Mn::fmax_d: return "fmax.d";
    case Mn::fcvt_s_d: return "fcvt.s.d";
    case Mn::fcvt_d_s: return "fcvt.d.s";
    case Mn::fcvt_w_d: return "fcvt.w.d";
    case Mn::fcvt_wu_d: return "fcvt.wu.d";
    case Mn::fcvt_l_d: return "fcvt.l.d";
    case Mn::fcvt_lu_d: return "fcvt.lu.d";
    case Mn::fcvt_d_w: return "fcvt.d.w";
    case Mn::fcvt_d_wu: return "fcvt.d.wu";
    case Mn::fcvt_d_l: return "fcvt.d.l";
    case Mn::fcvt_d_lu: return "fcvt.d.lu";
    case Mn::fmv_x_d: return "fmv.x.d";
    case Mn::fmv_d_x: return "fmv.d.x";
    case Mn::feq_d: return "feq.d";
    case Mn::flt_d: return "flt.d";
    case Mn::fle_d: return "fle.d";
    case Mn::fclass_d: return "fclass.d";
    case Mn::flq: return "flq";
    case Mn::fsq: return "fsq";
    case Mn::fmadd_q: return "fmadd.q";
    case Mn::fmsub_q: return "fmsub.q";
    case Mn::fnmsub_q: return "fnmsub.q";
    case Mn::fnmadd_q: return "fnmadd.q";
    case Mn::fadd_q: return "fadd.q";
    case Mn::fsub_q: return "fsub.q";
    case Mn::fmul_q: return "fmul.q";
    case Mn::fdiv_q: return "fdiv.q";
    case Mn::fsqrt_q: return "fsqrt.q";
    case Mn::fsgnj_q: return "fsgnj.q";
    case Mn::fsgnjn_q: return "fsgnjn.q";
    case Mn::fsgnjx_q: return "fsgnjx.q";
    case Mn::fmin_q: return "fmin.q";
    case Mn::fmax_q: return "fmax.q";
    case Mn::fcvt_s_q: return "fcvt.s.q";
    case Mn::fcvt_q_s: return "fcvt.q.s";
    case Mn::fcvt_d_q: return "fcvt.d.q";
    case Mn::fcvt_q_d: return "fcvt.q.d";
    case Mn::fcvt_w_q: return "fcvt.w.q";
    case Mn::fcvt_wu_q: return "fcvt.wu.q";
    case Mn::fcvt_l_q: return "fcvt.l.q";
    case Mn::fcvt_lu_q: return "fcvt.lu.q";
    case Mn::fcvt_q_w: return "fcvt.q.w";
    case Mn::fcvt_q_wu: return "fcvt.q.wu";
    case Mn::fcvt_q_l: return "fcvt.q.l";
    case Mn::fcvt_q_lu: return "fcvt.q.lu";
    case Mn::feq_q: return "feq.q";
    case Mn::flt_q: return "flt.q";
    case Mn::fle_q: return "fle.q";
    case Mn::fclass_q: return "fclass.q";
    case Mn::c_addi4spn: return "c.addi4spn";
    case Mn::c_fld: return "c.fld";
    case Mn::c_lw: return "c.lw";
    case Mn::c_ld: return "c.ld";
    case Mn::c_fsd: return "c.fsd";
    case Mn::c_sw: return "c.sw";
    case Mn::c_sd: return "c.sd";
    case Mn::c_addi: return "c.addi";
    case Mn::c_addiw: return "c.addiw";
    case Mn::c_li: return "c.li";
    case Mn::c_addi16sp: return "c.addi16sp";
    case Mn::c_lui: return "c.lui";
    case Mn::c_srli: return "c.srli";
    case Mn::c_srai: return "c.srai";
    case Mn::c_andi: return "c.andi";
    case Mn::c_sub: return "c.sub";
    case Mn::c_xor: return "c.xor";
    case Mn::c_or: return "c.or";
    case Mn::c_and: return "c.and";
    case Mn::c_subw: return "c.subw";
    case Mn::c_addw: return "c.addw";
    case Mn::c_j: return "c.j";
    case Mn::c_beqz: return "c.beqz";
    case Mn::c_bnez: return "c.bnez";
    case Mn::c_slli: return "c.slli";
    case Mn::c_fldsp: return "c.fldsp";
    case Mn::c_lwsp: return "c.lwsp";
    case Mn::c_ldsp: return "c.ldsp";
    case Mn::c_jr: return "c.jr";
    case Mn::c_mv: return "c.mv";
    case Mn::c_ebreak: return "c.ebreak";
    case Mn::c_jalr: return "c.jalr";
    case Mn::c_add: return "c.add";
    case Mn::c_fsdsp: return "c.fsdsp";
    case Mn::c_swsp: return "c.swsp";
    case Mn::c_sdsp: return "c.sdsp";
    case Mn::COUNT: break;
  }
  return "?";
}

Ext mnemonic_ext(Mn m) {
  auto i = uint16_t(m);
  if (i >= uint16_t(Mn::c_addi4spn)) return Ext::C;
  if (i >= uint16_t(Mn::flq)) return Ext::Q;
  if (i >= uint16_t(Mn::fld)) return Ext::D;
  if (i >= uint16_t(Mn::flw)) return Ext::F;
  if (i >= uint16_t(Mn::lr_w)) return Ext::A;
  if (i >= uint16_t(Mn::mul)) return Ext::M;
  if (i >= uint16_t(Mn::csrrw)) return Ext::Zicsr;
  if (m == Mn::fence_i) return Ext::Zifencei;
  return Ext::I;
}

static const char* kIntRegNames[32] = {
    "zero", "ra", "sp", "gp", "tp", "t0", "t1", "t2", "s0", "s1", "a0",
    "a1",   "a2", "a3", "a4", "a5", "a6", "a7", "s2", "s3", "s4", "s5",
    "s6",   "s7", "s8", "s9", "s10", "s11", "t3", "t4", "t5", "t6"};

static const char* kFpRegNames[32] = {
    "ft0", "ft1", "ft2",  "ft3",  "ft4", "ft5", "ft6",  "ft7",
    "fs0", "fs1", "fa0",  "fa1",  "fa2", "fa3", "fa4",  "fa5",
    "fa6", "fa7", "fs2",  "fs3",  "fs4", "fs5", "fs6",  "fs7",
    "fs8", "fs9", "fs10", "fs11", "ft8", "ft9", "ft10", "ft11"};

const char* reg_abi_name(Reg r) {
  return r.fp ? kFpRegNames[r.idx & 31] : kIntRegNames[r.idx & 31];
}

// ---------------------------------------------------------------------------
// 32-bit decode
// ---------------------------------------------------------------------------

namespace {

bool rm_ok(uint32_t rm) { return rm <= 4 || rm == 7; }

std::optional<DecodedInstr> decode32(uint32_t v) {
  DecodedInstr d;
  uint32_t opc = v & 0x7F;
  uint32_t rd = bits(v, 11, 7), f3 = bits(v, 14, 12), rs1 = bits(v, 19, 15),
           rs2 = bits(v, 24, 20), f7 = bits(v, 31, 25);
  int64_t imm_i = sext(v >> 20, 12);
  int64_t imm_s = sext((f7 << 5) | rd, 12);
  int64_t imm_b =
      sext((bit(v, 31) << 12) | (bit(v, 7) << 11) | (bits(v, 30, 25) << 5) |
               (bits(v, 11, 8) << 1), 13);
  int64_t imm_j =
      sext((bit(v, 31) << 20) | (bits(v, 19, 12) << 12) | (bit(v, 20) << 11) |
               (bits(v, 30, 21) << 1), 21);

  auto R = [&](Mn m) {
    d.mn = m; d.rd = int8_t(rd); d.rs1 = int8_t(rs1); d.rs2 = int8_t(rs2);
    d.hint = (rd == 0);
    return d;
  };
  auto I = [&](Mn m) {
    d.mn = m; d.rd = int8_t(rd); d.rs1 = int8_t(rs1);
    d.imm = imm_i; d.has_imm = true;
    return d;
  };

  switch (opc) {
    case 0x37:  // LUI
    case 0x17:  // AUIPC
      d.mn = (opc == 0x37) ? Mn::lui : Mn::auipc;
      d.rd = int8_t(rd);
      d.imm = bits(v, 31, 12);
      d.has_imm = true;
      d.hint = (rd == 0);
      return d;
    case 0x6F:  // JAL
      d.mn = Mn::jal; d.rd = int8_t(rd); d.imm = imm_j; d.has_imm = true;
      return d;
    case 0x67:  // JALR
      if (f3 != 0) return std::nullopt;
      return I(Mn::jalr);
    case 0x63: {  // BRANCH
      Mn m;
      switch (f3) {
        case 0: m = Mn::beq; break;
        case 1: m = Mn::bne; break;
        case 4: m = Mn::blt; break;
        case 5: m = Mn::bge; break;
        case 6: m = Mn::bltu; break;
        case 7: m = Mn::bgeu; break;
        default: return std::nullopt;
      }
      d.mn = m; d.rs1 = int8_t(rs1); d.rs2 = int8_t(rs2);
      d.imm = imm_b; d.has_imm = true;
      return d;
    }
    case 0x03: {  // LOAD
      Mn m;
      switch (f3) {
        case 0: m = Mn::lb; break;
        case 1: m = Mn::lh; break;
        case 2: m = Mn::lw; break;
        case 3: m = Mn::ld; break;
        case 4: m = Mn::lbu; break;
        case 5: m = Mn::lhu; break;
        case 6: m = Mn::lwu; break;
        default: return std::nullopt;
      }
      return I(m);
    }
    case 0x23: {  // STORE
      Mn m;
      switch (f3) {
        case 0: m = Mn::sb; break;
        case 1: m = Mn::sh; break;
        case 2: m = Mn::sw; break;
        case 3: m = Mn::sd; break;
        default: return std::nullopt;
      }
      d.mn = m; d.rs1 = int8_t(rs1); d.rs2 = int8_t(rs2);
      d.imm = imm_s; d.has_imm = true;
      return d;
    }
    case 0x13:  // OP-IMM
      switch (f3) {
        case 0: { auto r = I(Mn::addi); r.hint = (rd == 0); return r; }
        case 2: return I(Mn::slti);
        case 3: return I(Mn::sltiu);
        case 4: return I(Mn::xori);
        case 6: return I(Mn::ori);
        case 7: return I(Mn::andi);
        case 1:
          if (bits(v, 31, 26) != 0) return std::nullopt;
          d.mn = Mn::slli; d.rd = int8_t(rd); d.rs1 = int8_t(rs1);
          d.shamt = uint8_t(bits(v, 25, 20)); d.has_shamt = true;
          d.hint = (rd == 0);
          return d;
        case 5: {
          uint32_t top = bits(v, 31, 26);
          if (top != 0x00 && top != 0x10) return std::nullopt;
          d.mn = (top == 0x00) ? Mn::srli : Mn::srai;
          d.rd = int8_t(rd); d.rs1 = int8_t(rs1);
          d.shamt = uint8_t(bits(v, 25, 20)); d.has_shamt = true;
          d.hint = (rd == 0);
          return d;
        }
      }
      return std::nullopt;
    case 0x1B:  // OP-IMM-32
      switch (f3) {
        case 0: { auto r = I(Mn::addiw); r.hint = (rd == 0); return r; }
        case 1:
          if (f7 != 0) return std::nullopt;
          d.mn = Mn::slliw; d.rd = int8_t(rd); d.rs1 = int8_t(rs1);
          d.shamt = uint8_t(rs2); d.has_shamt = true; d.hint = (rd == 0);
          return d;
        case 5:
          if (f7 != 0x00 && f7 != 0x20) return std::nullopt;
          d.mn = (f7 == 0x00) ? Mn::srliw : Mn::sraiw;
          d.rd = int8_t(rd); d.rs1 = int8_t(rs1);
          d.shamt = uint8_t(rs2); d.has_shamt = true; d.hint = (rd == 0);
          return d;
      }
      return std::nullopt;
    case 0x33:  // OP
      if (f7 == 0x00) {
        switch (f3) {
          case 0: return R(Mn::add);
          case 1: return R(Mn::sll);
          case 2: return R(Mn::slt);
          case 3: return R(Mn::sltu);
          case 4: return R(Mn::xorr);
          case 5: return R(Mn::srl);
          case 6: return R(Mn::orr);
          case 7: return R(Mn::andr);
        }
      } else if (f7 == 0x20) {
        if (f3 == 0) return R(Mn::sub);
        if (f3 == 5) return R(Mn::sra);
      } else if (f7 == 0x01) {
        switch (f3) {
          case 0: return R(Mn::mul);
          case 1: return R(Mn::mulh);
          case 2: return R(Mn::mulhsu);
          case 3: return R(Mn::mulhu);
          case 4: return R(Mn::divi);
          case 5: return R(Mn::divu);
          case 6: return R(Mn::rem);
          case 7: return R(Mn::remu);
        }
      }
      return std::nullopt;
    case 0x3B:  // OP-32
      if (f7 == 0x00) {
        if (f3 == 0) return R(Mn::addw);
        if (f3 == 1) return R(Mn::sllw);
        if (f3 == 5) return R(Mn::srlw);
      } else if (f7 == 0x20) {
        if (f3 == 0) return R(Mn::subw);
        if (f3 == 5) return R(Mn::sraw);
      } else if (f7 == 0x01) {
        switch (f3) {
          case 0: return R(Mn::mulw);
          case 4: return R(Mn::divw);
          case 5: return R(Mn::divuw);
          case 6: return R(Mn::remw);
          case 7: return R(Mn::remuw);
        }
      }
      return std::nullopt;
    case 0x0F:  // MISC-MEM
      if (f3 > 1) return std::nullopt;
      // fm/pred/succ (and the reserved rd/rs1/imm of fence.i) are ignored
      // architecturally but kept so re-encoding reproduces the word.
      d.mn = (f3 == 0) ? Mn::fence : Mn::fence_i;
      d.rd = int8_t(rd);
      d.rs1 = int8_t(rs1);
      d.imm = v >> 20;
      d.has_imm = true;
      return d;
    case 0x73:  // SYSTEM
      if (f3 == 0) {
        if (v == 0x00000073) { d.mn = Mn::ecall; return d; }
        if (v == 0x00100073) { d.mn = Mn::ebreak; return d; }
        return std::nullopt;  // privileged forms not decoded
      }
      if (f3 == 4) return std::nullopt;
      {
        static const Mn csr_mn[8] = {Mn::COUNT, Mn::csrrw, Mn::csrrs,
                                     Mn::csrrc, Mn::COUNT, Mn::csrrwi,
                                     Mn::csrrsi, Mn::csrrci};
        d.mn = csr_mn[f3];
        d.rd = int8_t(rd);
        d.csr = uint16_t(v >> 20);
        d.has_csr = true;
        if (f3 >= 5) { d.imm = rs1; d.has_imm = true; }
        else d.rs1 = int8_t(rs1);
        return d;
      }
    case 0x2F: {  // AMO
      if (f3 != 2 && f3 != 3) return std::nullopt;
      bool dbl = (f3 == 3);
      uint32_t f5 = bits(v, 31, 27);
      d.aq = bit(v, 26);
      d.rl = bit(v, 25);
      Mn m;
      switch (f5) {
        case 0x02:
          if (rs2 != 0) return std::nullopt;
          m = dbl ? Mn::lr_d : Mn::lr_w; break;
        case 0x03: m = dbl ? Mn::sc_d : Mn::sc_w; break;
        case 0x01: m = dbl ? Mn::amoswap_d : Mn::amoswap_w; break;
        case 0x00: m = dbl ? Mn::amoadd_d : Mn::amoadd_w; break;
        case 0x04: m = dbl ? Mn::amoxor_d : Mn::amoxor_w; break;
        case 0x0C: m = dbl ? Mn::amoand_d : Mn::amoand_w; break;
        case 0x08: m = dbl ? Mn::amoor_d : Mn::amoor_w; break;
        case 0x10: m = dbl ? Mn::amomin_d : Mn::amomin_w; break;
        case 0x14: m = dbl ? Mn::amomax_d : Mn::amomax_w; break;
        case 0x18: m = dbl ? Mn::amominu_d : Mn::amominu_w; break;
        case 0x1C: m = dbl ? Mn::amomaxu_d : Mn::amomaxu_w; break;
        default: return std::nullopt;
      }
      d.mn = m; d.rd = int8_t(rd); d.rs1 = int8_t(rs1); d.rs2 = int8_t(rs2);
      return d;
    }
    case 0x07: {  // LOAD-FP
      Mn m;
      if (f3 == 2) m = Mn::flw;
      else if (f3 == 3) m = Mn::fld;
      else if (f3 == 4) m = Mn::flq;
      else return std::nullopt;
      d.mn = m; d.rd = int8_t(rd); d.rd_fp = true; d.rs1 = int8_t(rs1);
      d.imm = imm_i; d.has_imm = true;
      return d;
    }
    case 0x27: {  // STORE-FP
      Mn m;
      if (f3 == 2) m = Mn::fsw;
      else if (f3 == 3) m = Mn::fsd;
      else if (f3 == 4) m = Mn::fsq;
      else return std::nullopt;
      d.mn = m; d.rs1 = int8_t(rs1); d.rs2 = int8_t(rs2); d.rs2_fp = true;
      d.imm = imm_s; d.has_imm = true;
      return d;
    }
    case 0x43: case 0x47: case 0x4B: case 0x4F: {  // F[N]M{ADD,SUB}
      uint32_t fmt = bits(v, 26, 25);
      if (fmt == 2) return std::nullopt;
      if (!rm_ok(f3)) return std::nullopt;
      static const Mn tbl[4][3] = {
          {Mn::fmadd_s, Mn::fmadd_d, Mn::fmadd_q},
          {Mn::fmsub_s, Mn::fmsub_d, Mn::fmsub_q},
          {Mn::fnmsub_s, Mn::fnmsub_d, Mn::fnmsub_q},
          {Mn::fnmadd_s, Mn::fnmadd_d, Mn::fnmadd_q}};
      int fi = fmt == 0 ? 0 : fmt == 1 ? 1 : 2;
      d.mn = tbl[(opc >> 2) & 3][fi];
      d.rd = int8_t(rd); d.rs1 = int8_t(rs1); d.rs2 = int8_t(rs2);
      d.rs3 = int8_t(bits(v, 31, 27));
      d.rd_fp = d.rs1_fp = d.rs2_fp = d.rs3_fp = true;
      d.rm = uint8_t(f3); d.has_rm = true;
      return d;
    }
    case 0x53: {  // OP-FP
      uint32_t fmt = f7 & 3, op = f7 >> 2;
      if (fmt == 2) return std::nullopt;
      int fi = fmt == 0 ? 0 : fmt == 1 ? 1 : 2;
      auto FR = [&](Mn m, bool needs_rm, bool rd_int = false,
                    bool rs1_int = false, bool unary = false) -> std::optional<DecodedInstr> {
        if (needs_rm && !rm_ok(f3)) return std::nullopt;
        d.mn = m; d.rd = int8_t(rd); d.rs1 = int8_t(rs1);
        d.rd_fp = !rd_int; d.rs1_fp = !rs1_int;
        if (!unary) { d.rs2 = int8_t(rs2); d.rs2_fp = true; }
        if (needs_rm) { d.rm = uint8_t(f3); d.has_rm = true; }
        return d;
      };
      switch (op) {
        case 0x00: { static const Mn t[3] = {Mn::fadd_s, Mn::fadd_d, Mn::fadd_q}; return FR(t[fi], true); }
        case 0x01: { static const Mn t[3] = {Mn::fsub_s, Mn::fsub_d, Mn::fsub_q}; return FR(t[fi], true); }
        case 0x02: { static const Mn t[3] = {Mn::fmul_s, Mn::fmul_d, Mn::fmul_q}; return FR(t[fi], true); }
        case 0x03: { static const Mn t[3] = {Mn::fdiv_s, Mn::fdiv_d, Mn::fdiv_q}; return FR(t[fi], true); }
        case 0x0B: {
          if (rs2 != 0) return std::nullopt;
          static const Mn t[3] = {Mn::fsqrt_s, Mn::fsqrt_d, Mn::fsqrt_q};
          return FR(t[fi], true, false, false, true);
        }
        case 0x04: {
          static const Mn t[3][3] = {{Mn::fsgnj_s, Mn::fsgnj_d, Mn::fsgnj_q},
                                     {Mn::fsgnjn_s, Mn::fsgnjn_d, Mn::fsgnjn_q},
                                     {Mn::fsgnjx_s, Mn::fsgnjx_d, Mn::fsgnjx_q}};
          if (f3 > 2) return std::nullopt;
          return FR(t[f3][fi], false);
        }
        case 0x05: {
          static const Mn t[2][3] = {{Mn::fmin_s, Mn::fmin_d, Mn::fmin_q},
                                     {Mn::fmax_s, Mn::fmax_d, Mn::fmax_q}};
          if (f3 > 1) return std::nullopt;
          return FR(t[f3][fi], false);
        }
        case 0x08: {  // fcvt between fp formats; rs2 encodes the source fmt
          Mn m;
          if (fmt == 0 && rs2 == 1) m = Mn::fcvt_s_d;
          else if (fmt == 0 && rs2 == 3) m = Mn::fcvt_s_q;
          else if (fmt == 1 && rs2 == 0) m = Mn::fcvt_d_s;
          else if (fmt == 1 && rs2 == 3) m = Mn::fcvt_d_q;
          else if (fmt == 3 && rs2 == 0) m = Mn::fcvt_q_s;
          else if (fmt == 3 && rs2 == 1) m = Mn::fcvt_q_d;
          else return std::nullopt;
          return FR(m, true, false, false, true);
        }
        case 0x14: {  // fcmp
          static const Mn t[3][3] = {{Mn::fle_s, Mn::fle_d, Mn::fle_q},
                                     {Mn::flt_s, Mn::flt_d, Mn::flt_q},
                                     {Mn::feq_s, Mn::feq_d, Mn::feq_q}};
          if (f3 > 2) return std::nullopt;
          auto r = FR(t[f3][fi], false, true);
          if (r) r->hint = (rd == 0);
          return r;
        }
        case 0x18: {  // fcvt.int.fmt
          static const Mn t[4][3] = {
              {Mn::fcvt_w_s, Mn::fcvt_w_d, Mn::fcvt_w_q},
              {Mn::fcvt_wu_s, Mn::fcvt_wu_d, Mn::fcvt_wu_q},
              {Mn::fcvt_l_s, Mn::fcvt_l_d, Mn::fcvt_l_q},
              {Mn::fcvt_lu_s, Mn::fcvt_lu_d, Mn::fcvt_lu_q}};
          if (rs2 > 3) return std::nullopt;
          auto r = FR(t[rs2][fi], true, true, false, true);
          if (r) r->hint = (rd == 0);
          return r;
        }
        case 0x1A: {  // fcvt.fmt.int
          static const Mn t[4][3] = {
              {Mn::fcvt_s_w, Mn::fcvt_d_w, Mn::fcvt_q_w},
              {Mn::fcvt_s_wu, Mn::fcvt_d_wu, Mn::fcvt_q_wu},
              {Mn::fcvt_s_l, Mn::fcvt_d_l, Mn::fcvt_q_l},
              {Mn::fcvt_s_lu, Mn::fcvt_d_lu, Mn::fcvt_q_lu}};
          if (rs2 > 3) return std::nullopt;
          return FR(t[rs2][fi], true, false, true, true);
        }
        case 0x1C: {  // fmv.x / fclass
          if (rs2 != 0) return std::nullopt;
          if (f3 == 0) {
            if (fmt == 0) { auto r = FR(Mn::fmv_x_w, false, true, false, true); if (r) r->hint = (rd == 0); return r; }
            if (fmt == 1) { auto r = FR(Mn::fmv_x_d, false, true, false, true); if (r) r->hint = (rd == 0); return r; }
            return std::nullopt;  // fmv.x.q is RV128
          }
          if (f3 == 1) {
            static const Mn t[3] = {Mn::fclass_s, Mn::fclass_d, Mn::fclass_q};
            auto r = FR(t[fi], false, true, false, true);
            if (r) r->hint = (rd == 0);
            return r;
          }
          return std::nullopt;
        }
        case 0x1E: {  // fmv.fmt.x
          if (rs2 != 0 || f3 != 0) return std::nullopt;
          if (fmt == 0) return FR(Mn::fmv_w_x, false, false, true, true);
          if (fmt == 1) return FR(Mn::fmv_d_x, false, false, true, true);
          return std::nullopt;
        }
      }
      return std::nullopt;
    }
  }
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// 16-bit decode (RV64C)
// ---------------------------------------------------------------------------

std::optional<DecodedInstr> decode16(uint16_t v) {
  if (v == 0) return std::nullopt;  // defined illegal instruction
  DecodedInstr d;
  d.compressed = true;
  uint32_t op = v & 3, f3 = bits(v, 15, 13);
  uint32_t rd = bits(v, 11, 7), rs2 = bits(v, 6, 2);
  uint32_t rdp = bits(v, 4, 2) + 8, rs1p = bits(v, 9, 7) + 8;

  if (op == 0) {
    switch (f3) {
      case 0: {  // c.addi4spn
        uint32_t imm = (bits(v, 12, 11) << 4) | (bits(v, 10, 7) << 6) |
                       (bit(v, 6) << 2) | (bit(v, 5) << 3);
        if (imm == 0) return std::nullopt;  // reserved
        d.mn = Mn::c_addi4spn; d.rd = int8_t(rdp); d.rs1 = 2;
        d.imm = imm; d.has_imm = true;
        return d;
      }
      case 1:  // c.fld
        d.mn = Mn::c_fld; d.rd = int8_t(rdp); d.rd_fp = true;
        d.rs1 = int8_t(rs1p);
        d.imm = (bits(v, 12, 10) << 3) | (bits(v, 6, 5) << 6);
        d.has_imm = true;
        return d;
      case 2:  // c.lw
        d.mn = Mn::c_lw; d.rd = int8_t(rdp); d.rs1 = int8_t(rs1p);
        d.imm = (bits(v, 12, 10) << 3) | (bit(v, 6) << 2) | (bit(v, 5) << 6);
        d.has_imm = true;
        return d;
      case 3:  // c.ld
        d.mn = Mn::c_ld; d.rd = int8_t(rdp); d.rs1 = int8_t(rs1p);
        d.imm = (bits(v, 12, 10) << 3) | (bits(v, 6, 5) << 6);
        d.has_imm = true;
        return d;
      case 5:  // c.fsd
        d.mn = Mn::c_fsd; d.rs1 = int8_t(rs1p); d.rs2 = int8_t(rdp);
        d.rs2_fp = true;
        d.imm = (bits(v, 12, 10) << 3) | (bits(v, 6, 5) << 6);
        d.has_imm = true;
        return d;
      case 6:  // c.sw
        d.mn = Mn::c_sw; d.rs1 = int8_t(rs1p); d.rs2 = int8_t(rdp);
        d.imm = (bits(v, 12, 10) << 3) | (bit(v, 6) << 2) | (bit(v, 5) << 6);
        d.has_imm = true;
        return d;
      case 7:  // c.sd
        d.mn = Mn::c_sd; d.rs1 = int8_t(rs1p); d.rs2 = int8_t(rdp);
        d.imm = (bits(v, 12, 10) << 3) | (bits(v, 6, 5) << 6);
        d.has_imm = true;
        return d;
    }
    return std::nullopt;
  }

  if (op == 1) {
    int64_t imm6 = sext((bit(v, 12) << 5) | bits(v, 6, 2), 6);
    switch (f3) {
      case 0:  // c.addi (c.nop when rd==0)
        d.mn = Mn::c_addi; d.rd = int8_t(rd); d.rs1 = int8_t(rd);
        d.imm = imm6; d.has_imm = true;
        d.hint = (rd == 0 || imm6 == 0);
        return d;
      case 1:  // c.addiw
        if (rd == 0) return std::nullopt;  // reserved
        d.mn = Mn::c_addiw; d.rd = int8_t(rd); d.rs1 = int8_t(rd);
        d.imm = imm6; d.has_imm = true;
        return d;
      case 2:  // c.li
        d.mn = Mn::c_li; d.rd = int8_t(rd);
        d.imm = imm6; d.has_imm = true;
        d.hint = (rd == 0);
        return d;
      case 3:
        if (rd == 2) {  // c.addi16sp
          int64_t imm = sext((bit(v, 12) << 9) | (bit(v, 6) << 4) |
                                 (bit(v, 5) << 6) | (bits(v, 4, 3) << 7) |
                                 (bit(v, 2) << 5), 10);
          if (imm == 0) return std::nullopt;  // reserved
          d.mn = Mn::c_addi16sp; d.rd = 2; d.rs1 = 2;
          d.imm = imm; d.has_imm = true;
          return d;
        } else {  // c.lui
          if (imm6 == 0) return std::nullopt;  // reserved
          d.mn = Mn::c_lui; d.rd = int8_t(rd);
          d.imm = imm6; d.has_imm = true;
          d.hint = (rd == 0);
          return d;
        }
      case 4: {
        uint32_t f2 = bits(v, 11, 10);
        if (f2 == 0 || f2 == 1) {
          uint32_t sh = (bit(v, 12) << 5) | bits(v, 6, 2);
          d.mn = (f2 == 0) ? Mn::c_srli : Mn::c_srai;
          d.rd = int8_t(rs1p); d.rs1 = int8_t(rs1p);
          d.shamt = uint8_t(sh); d.has_shamt = true;
          d.hint = (sh == 0);  // shift-of-64 is RV128; RV32/64 HINT
          return d;
        }
        if (f2 == 2) {
          d.mn = Mn::c_andi; d.rd = int8_t(rs1p); d.rs1 = int8_t(rs1p);
          d.imm = imm6; d.has_imm = true;
          return d;
        }
        {
          uint32_t f2b = bits(v, 6, 5);
          Mn m;
          if (bit(v, 12) == 0) {
            static const Mn t[4] = {Mn::c_sub, Mn::c_xor, Mn::c_or, Mn::c_and};
            m = t[f2b];
          } else {
            if (f2b == 0) m = Mn::c_subw;
            else if (f2b == 1) m = Mn::c_addw;
            else return std::nullopt;  // reserved
          }
          d.mn = m; d.rd = int8_t(rs1p); d.rs1 = int8_t(rs1p);
          d.rs2 = int8_t(rdp);
          return d;
        }
      }
      case 5: {  // c.j
        int64_t imm = sext((bit(v, 12) << 11) | (bit(v, 11) << 4) |
                               (bits(v, 10, 9) << 8) | (bit(v, 8) << 10) |
                               (bit(v, 7) << 6) | (bit(v, 6) << 7) |
                               (bits(v, 5, 3) << 1) | (bit(v, 2) << 5), 12);
        d.mn = Mn::c_j; d.imm = imm; d.has_imm = true;
        return d;
      }
      case 6:
      case 7: {  // c.beqz / c.bnez
        int64_t imm = sext((bit(v, 12) << 8) | (bits(v, 11, 10) << 3) |
                               (bits(v, 6, 5) << 6) | (bits(v, 4, 3) << 1) |
                               (bit(v, 2) << 5), 9);
        d.mn = (f3 == 6) ? Mn::c_beqz : Mn::c_bnez;
        d.rs1 = int8_t(rs1p); d.imm = imm; d.has_imm = true;
        return d;
      }
    }
    return std::nullopt;
  }

  // op == 2
  switch (f3) {
    case 0: {  // c.slli
      uint32_t sh = (bit(v, 12) << 5) | bits(v, 6, 2);
      d.mn = Mn::c_slli; d.rd = int8_t(rd); d.rs1 = int8_t(rd);
      d.shamt = uint8_t(sh); d.has_shamt = true;
      d.hint = (rd == 0 || sh == 0);
      return d;
    }
    case 1:  // c.fldsp
      d.mn = Mn::c_fldsp; d.rd = int8_t(rd); d.rd_fp = true; d.rs1 = 2;
      d.imm = (bit(v, 12) << 5) | (bits(v, 6, 5) << 3) | (bits(v, 4, 2) << 6);
      d.has_imm = true;
      return d;
    case 2:  // c.lwsp
      if (rd == 0) return std::nullopt;  // reserved
      d.mn = Mn::c_lwsp; d.rd = int8_t(rd); d.rs1 = 2;
      d.imm = (bit(v, 12) << 5) | (bits(v, 6, 4) << 2) | (bits(v, 3, 2) << 6);
      d.has_imm = true;
      return d;
    case 3:  // c.ldsp
      if (rd == 0) return std::nullopt;  // reserved
      d.mn = Mn::c_ldsp; d.rd = int8_t(rd); d.rs1 = 2;
      d.imm = (bit(v, 12) << 5) | (bits(v, 6, 5) << 3) | (bits(v, 4, 2) << 6);
      d.has_imm = true;
      return d;
    case 4:
      if (bit(v, 12) == 0) {
        if (rs2 == 0) {  // c.jr
          if (rd == 0) return std::nullopt;  // reserved
          d.mn = Mn::c_jr; d.rs1 = int8_t(rd);
          return d;
        }
        d.mn = Mn::c_mv; d.rd = int8_t(rd); d.rs2 = int8_t(rs2);
        d.hint = (rd == 0);
        return d;
      } else {
        if (rs2 == 0) {
          if (rd == 0) { d.mn = Mn::c_ebreak; return d; }
          d.mn = Mn::c_jalr; d.rd = 1; d.rs1 = int8_t(rd);
          return d;
        }
        d.mn = Mn::c_add; d.rd = int8_t(rd); d.rs1 = int8_t(rd);
        d.rs2 = int8_t(rs2);
        d.hint = (rd == 0);
        return d;
      }
    case 5:  // c.fsdsp
      d.mn = Mn::c_fsdsp; d.rs1 = 2; d.rs2 = int8_t(rs2); d.rs2_fp = true;
      d.imm = (bits(v, 12, 10) << 3) | (bits(v, 9, 7) << 6);
      d.has_imm = true;
      return d;
    case 6:  // c.swsp
      d.mn = Mn::c_swsp; d.rs1 = 2; d.rs2 = int8_t(rs2);
      d.imm = (bits(v, 12, 9) << 2) | (bits(v, 8, 7) << 6);
      d.has_imm = true;
      return d;
    case 7:  // c.sdsp
      d.mn = Mn::c_sdsp; d.rs1 = 2; d.rs2 = int8_t(rs2);
      d.imm = (bits(v, 12, 10) << 3) | (bits(v, 9, 7) << 6);
      d.has_imm = true;
      return d;
  }
  return std::nullopt;
}

}  // namespace

std::optional<DecodedInstr> decode(InstrWord w) {
  if (w.width == 2) {
    if ((w.value & 3) == 3) return std::nullopt;
    return decode16(uint16_t(w.value));
  }
  if (w.width == 4) {
    if ((w.value & 3) != 3 || (w.value & 0x1C) == 0x1C) return std::nullopt;
    return decode32(w.value);
  }
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// Encode
// ---------------------------------------------------------------------------

namespace {

bool fits_sint(int64_t v, int bits) {
  return v >= -(int64_t(1) << (bits - 1)) && v < (int64_t(1) << (bits - 1));
}
bool fits_uint(int64_t v, int bits) {
  return v >= 0 && v < (int64_t(1) << bits);
}

std::optional<uint32_t> enc_rtype(uint32_t f7, uint32_t f3, uint32_t opc,
                                  const DecodedInstr& d) {
  if (d.rd < 0 || d.rs1 < 0 || d.rs2 < 0) return std::nullopt;
  return (f7 << 25) | (uint32_t(d.rs2) << 20) | (uint32_t(d.rs1) << 15) |
         (f3 << 12) | (uint32_t(d.rd) << 7) | opc;
}

std::optional<uint32_t> enc_itype(uint32_t f3, uint32_t opc,
                                  const DecodedInstr& d) {
  if (d.rd < 0 || d.rs1 < 0 || !fits_sint(d.imm, 12)) return std::nullopt;
  return ((uint32_t(d.imm) & 0xFFF) << 20) | (uint32_t(d.rs1) << 15) |
         (f3 << 12) | (uint32_t(d.rd) << 7) | opc;
}

std::optional<uint32_t> enc_stype(uint32_t f3, uint32_t opc,
                                  const DecodedInstr& d) {
  if (d.rs1 < 0 || d.rs2 < 0 || !fits_sint(d.imm, 12)) return std::nullopt;
  uint32_t imm = uint32_t(d.imm) & 0xFFF;
  return ((imm >> 5) << 25) | (uint32_t(d.rs2) << 20) |
         (uint32_t(d.rs1) << 15) | (f3 << 12) | ((imm & 0x1F) << 7) | opc;
}

std::optional<uint32_t> enc_btype(uint32_t f3, const DecodedInstr& d) {
  if (d.rs1 < 0 || d.rs2 < 0 || !fits_sint(d.imm, 13) || (d.imm & 1))
    return std::nullopt;
  uint32_t imm = uint32_t(d.imm) & 0x1FFF;
  return (bit(imm, 12) << 31) | (bits(imm, 10, 5) << 25) |
         (uint32_t(d.rs2) << 20) | (uint32_t(d.rs1) << 15) | (f3 << 12) |
         (bits(imm, 4, 1) << 8) | (bit(imm, 11) << 7) | 0x63;
}

std::optional<uint32_t> enc_amo(uint32_t f5, bool dbl, const DecodedInstr& d) {
  if (d.rd < 0 || d.rs1 < 0 || d.rs2 < 0) return std::nullopt;
  return (f5 << 27) | (uint32_t(d.aq) << 26) | (uint32_t(d.rl) << 25) |
         (uint32_t(d.rs2) << 20) | (uint32_t(d.rs1) << 15) |
         ((dbl ? 3u : 2u) << 12) | (uint32_t(d.rd) << 7) | 0x2F;
}

bool creg(int r) { return r >= 8 && r <= 15; }

}  // namespace

std::optional<InstrWord> encode(const DecodedInstr& d, int width_pref) {
  auto W32 = [&](std::optional<uint32_t> v) -> std::optional<InstrWord> {
    if (!v || (width_pref != 0 && width_pref != 4)) return std::nullopt;
    return InstrWord::word(*v);
  };
  auto W16 = [&](std::optional<uint32_t> v) -> std::optional<InstrWord> {
    if (!v || (width_pref != 0 && width_pref != 2)) return std::nullopt;
    return InstrWord::half(uint16_t(*v));
  };

  switch (d.mn) {
    case Mn::lui:
    case Mn::auipc: {
      if (d.rd < 0 || !fits_uint(d.imm & 0xFFFFF, 20)) return std::nullopt;
      int64_t f = d.imm & 0xFFFFF;
      if ((d.imm >> 20) != 0 && (d.imm >> 20) != -1) return std::nullopt;
      uint32_t opc = d.mn == Mn::lui ? 0x37 : 0x17;
      return W32((uint32_t(f) << 12) | (uint32_t(d.rd) << 7) | opc);
    }
    case Mn::jal: {
      if (d.rd < 0 || !fits_sint(d.imm, 21) || (d.imm & 1)) return std::nullopt;
      uint32_t imm = uint32_t(d.imm) & 0x1FFFFF;
      return W32((bit(imm, 20) << 31) | (bits(imm, 10, 1) << 21) |
                 (bit(imm, 11) << 20) | (bits(imm, 19, 12) << 12) |
                 (uint32_t(d.rd) << 7) | 0x6F);
    }
    case Mn::jalr: return W32(enc_itype(0, 0x67, d));
    case Mn::beq: return W32(enc_btype(0, d));
    case Mn::bne: return W32(enc_btype(1, d));
    case Mn::blt: return W32(enc_btype(4, d));
    case Mn::bge: return W32(enc_btype(5, d));
    case Mn::bltu: return W32(enc_btype(6, d));
    case Mn::bgeu: return W32(enc_btype(7, d));
    case Mn::lb: return W32(enc_itype(0, 0x03, d));
    case Mn::lh: return W32(enc_itype(1, 0x03, d));
    case Mn::lw: return W32(enc_itype(2, 0x03, d));
    case Mn::ld: return W32(enc_itype(3, 0x03, d));
    case Mn::lbu: return W32(enc_itype(4, 0x03, d));
    case Mn::lhu: return W32(enc_itype(5, 0x03, d));
    case Mn::lwu: return W32(enc_itype(6, 0x03, d));
    case Mn::sb: return W32(enc_stype(0, 0x23, d));
    case Mn::sh: return W32(enc_stype(1, 0x23, d));
    case Mn::sw: return W32(enc_stype(2, 0x23, d));
    case Mn::sd: return W32(enc_stype(3, 0x23, d));
    case Mn::addi: return W32(enc_itype(0, 0x13, d));
    case Mn::slti: return W32(enc_itype(2, 0x13, d));
    case Mn::sltiu: return W32(enc_itype(3, 0x13, d));
    case Mn::xori: return W32(enc_itype(4, 0x13, d));
    case Mn::ori: return W32(enc_itype(6, 0x13, d));
    case Mn::andi: return W32(enc_itype(7, 0x13, d));
    case Mn::slli:
    case Mn::srli:
    case Mn::srai: {
      if (d.rd < 0 || d.rs1 < 0 || d.shamt > 63) return std::nullopt;
      uint32_t top = d.mn == Mn::srai ? 0x10u << 26 : 0;
      uint32_t f3 = d.mn == Mn::slli ? 1 : 5;
      return W32(top | (uint32_t(d.shamt) << 20) | (uint32_t(d.rs1) << 15) |
                 (f3 << 12) | (uint32_t(d.rd) << 7) | 0x13);
    }
    case Mn::addiw: return W32(enc_itype(0, 0x1B, d));
    case Mn::slliw:
    case Mn::srliw:
    case Mn::sraiw: {
      if (d.rd < 0 || d.rs1 < 0 || d.shamt > 31) return std::nullopt;
      uint32_t f7 = d.mn == Mn::sraiw ? 0x20 : 0;
      uint32_t f3 = d.mn == Mn::slliw ? 1 : 5;
      return W32((f7 << 25) | (uint32_t(d.shamt) << 20) |
                 (uint32_t(d.rs1) << 15) | (f3 << 12) | (uint32_t(d.rd) << 7) |
                 0x1B);
    }
    case Mn::add: return W32(enc_rtype(0x00, 0, 0x33, d));
    case Mn::sub: return W32(enc_rtype(0x20, 0, 0x33, d));
    case Mn::sll: return W32(enc_rtype(0x00, 1, 0x33, d));
    case Mn::slt: return W32(enc_rtype(0x00, 2, 0x33, d));
    case Mn::sltu: return W32(enc_rtype(0x00, 3, 0x33, d));
    case Mn::xorr: return W32(enc_rtype(0x00, 4, 0x33, d));
    case Mn::srl: return W32(enc_rtype(0x00, 5, 0x33, d));
    case Mn::sra: return W32(enc_rtype(0x20, 5, 0x33, d));
    case Mn::orr: return W32(enc_rtype(0x00, 6, 0x33, d));
    case Mn::andr: return W32(enc_rtype(0x00, 7, 0x33, d));
    case Mn::addw: return W32(enc_rtype(0x00, 0, 0x3B, d));
    case Mn::subw: return W32(enc_rtype(0x20, 0, 0x3B, d));
    case Mn::sllw: return W32(enc_rtype(0x00, 1, 0x3B, d));
    case Mn::srlw: return W32(enc_rtype(0x00, 5, 0x3B, d));
    case Mn::sraw: return W32(enc_rtype(0x20, 5, 0x3B, d));
    case Mn::mul: return W32(enc_rtype(0x01, 0, 0x33, d));
    case Mn::mulh: return W32(enc_rtype(0x01, 1, 0x33, d));
    case Mn::mulhsu: return W32(enc_rtype(0x01, 2, 0x33, d));
    case Mn::mulhu: return W32(enc_rtype(0x01, 3, 0x33, d));
    case Mn::divi: return W32(enc_rtype(0x01, 4, 0x33, d));
    case Mn::divu: return W32(enc_rtype(0x01, 5, 0x33, d));
    case Mn::rem: return W32(enc_rtype(0x01, 6, 0x33, d));
    case Mn::remu: return W32(enc_rtype(0x01, 7, 0x33, d));
    case Mn::mulw: return W32(enc_rtype(0x01, 0, 0x3B, d));
    case Mn::divw: return W32(enc_rtype(0x01, 4, 0x3B, d));
    case Mn::divuw: return W32(enc_rtype(0x01, 5, 0x3B, d));
    case Mn::remw: return W32(enc_rtype(0x01, 6, 0x3B, d));
    case Mn::remuw: return W32(enc_rtype(0x01, 7, 0x3B, d));
    case Mn::fence:
    case Mn::fence_i: {
      uint32_t f3 = d.mn == Mn::fence ? 0 : 1;
      uint32_t rd = d.rd < 0 ? 0 : uint32_t(d.rd);
      uint32_t rs1 = d.rs1 < 0 ? 0 : uint32_t(d.rs1);
      return W32(((uint32_t(d.imm) & 0xFFF) << 20) | (rs1 << 15) | (f3 << 12) |
                 (rd << 7) | 0x0F);
    }
    case Mn::ecall: return W32(0x00000073);
    case Mn::ebreak: return W32(0x00100073);
    case Mn::csrrw:
    case Mn::csrrs:
    case Mn::csrrc: {
      if (d.rd < 0 || d.rs1 < 0) return std::nullopt;
      uint32_t f3 = d.mn == Mn::csrrw ? 1 : d.mn == Mn::csrrs ? 2 : 3;
      return W32((uint32_t(d.csr) << 20) | (uint32_t(d.rs1) << 15) |
                 (f3 << 12) | (uint32_t(d.rd) << 7) | 0x73);
    }
    case Mn::csrrwi:
    case Mn::csrrsi:
    case Mn::csrrci: {
      if (d.rd < 0 || !fits_uint(d.imm, 5)) return std::nullopt;
      uint32_t f3 = d.mn == Mn::csrrwi ? 5 : d.mn == Mn::csrrsi ? 6 : 7;
      return W32((uint32_t(d.csr) << 20) | (uint32_t(d.imm) << 15) |
                 (f3 << 12) | (uint32_t(d.rd) << 7) | 0x73);
    }
    case Mn::lr_w: return W32(enc_amo(0x02, false, d));
    case Mn::sc_w: return W32(enc_amo(0x03, false, d));
    case Mn::amoswap_w: return W32(enc_amo(0x01, false, d));
    case Mn::amoadd_w: return W32(enc_amo(0x00, false, d));
    case Mn::amoxor_w: return W32(enc_amo(0x04, false, d));
    case Mn::amoand_w: return W32(enc_amo(0x0C, false, d));
    case Mn::amoor_w: return W32(enc_amo(0x08, false, d));
    case Mn::amomin_w: return W32(enc_amo(0x10, false, d));
    case Mn::amomax_w: return W32(enc_amo(0x14, false, d));
    case Mn::amominu_w: return W32(enc_amo(0x18, false, d));
    case Mn::amomaxu_w: return W32(enc_amo(0x1C, false, d));
    case Mn::lr_d: return W32(enc_amo(0x02, true, d));
    case Mn::sc_d: return W32(enc_amo(0x03, true, d));
    case Mn::amoswap_d: return W32(enc_amo(0x01, true, d));
    case Mn::amoadd_d: return W32(enc_amo(0x00, true, d));
    case Mn::amoxor_d: return W32(enc_amo(0x04, true, d));
    case Mn::amoand_d: return W32(enc_amo(0x0C, true, d));
    case Mn::amoor_d: return W32(enc_amo(0x08, true, d));
    case Mn::amomin_d: return W32(enc_amo(0x10, true, d));
    case Mn::amomax_d: return W32(enc_amo(0x14, true, d));
    case Mn::amominu_d: return W32(enc_amo(0x18, true, d));
    case Mn::amomaxu_d: return W32(enc_amo(0x1C, true, d));
    case Mn::flw: return W32(enc_itype(2, 0x07, d));
    case Mn::fld: return W32(enc_itype(3, 0x07, d));
    case Mn::flq: return W32(enc_itype(4, 0x07, d));
    case Mn::fsw: return W32(enc_stype(2, 0x27, d));
    case Mn::fsd: return W32(enc_stype(3, 0x27, d));
    case Mn::fsq: return W32(enc_stype(4, 0x27, d));
    case Mn::fmadd_s: case Mn::fmadd_d: case Mn::fmadd_q:
    case Mn::fmsub_s: case Mn::fmsub_d: case Mn::fmsub_q:
    case Mn::fnmsub_s: case Mn::fnmsub_d: case Mn::fnmsub_q:
    case Mn::fnmadd_s: case Mn::fnmadd_d: case Mn::fnmadd_q: {
      if (d.rd < 0 || d.rs1 < 0 || d.rs2 < 0 || d.rs3 < 0) return std::nullopt;
      uint32_t opc, fmt;
      switch (d.mn) {
        case Mn::fmadd_s: opc = 0x43; fmt = 0; break;
        case Mn::fmadd_d: opc = 0x43; fmt = 1; break;
        case Mn::fmadd_q: opc = 0x43; fmt = 3; break;
        case Mn::fmsub_s: opc = 0x47; fmt = 0; break;
        case Mn::fmsub_d: opc = 0x47; fmt = 1; break;
        case Mn::fmsub_q: opc = 0x47; fmt = 3; break;
        case Mn::fnmsub_s: opc = 0x4B; fmt = 0; break;
        case Mn::fnmsub_d: opc = 0x4B; fmt = 1; break;
        case Mn::fnmsub_q: opc = 0x4B; fmt = 3; break;
        default: opc = 0x4F; fmt = d.mn == Mn::fnmadd_s ? 0 :
                                   d.mn == Mn::fnmadd_d ? 1 : 3; break;
      }
      if (!rm_ok(d.rm)) return std::nullopt;
      return W32((uint32_t(d.rs3) << 27) | (fmt << 25) |
                 (uint32_t(d.rs2) << 20) | (uint32_t(d.rs1) << 15) |
                 (uint32_t(d.rm) << 12) | (uint32_t(d.rd) << 7) | opc);
    }
    // compressed
    case Mn::c_addi4spn: {
      if (!creg(d.rd) || !fits_uint(d.imm, 10) || (d.imm & 3) || d.imm == 0)
        return std::nullopt;
      uint32_t u = uint32_t(d.imm);
      return W16((bits(u, 5, 4) << 11) | (bits(u, 9, 6) << 7) |
                 (bit(u, 2) << 6) | (bit(u, 3) << 5) |
                 ((uint32_t(d.rd) - 8) << 2) | 0x0);
    }
    case Mn::c_fld:
    case Mn::c_ld: {
      if (!creg(d.rd) || !creg(d.rs1) || !fits_uint(d.imm, 8) || (d.imm & 7))
        return std::nullopt;
      uint32_t u = uint32_t(d.imm);
      uint32_t f3 = d.mn == Mn::c_fld ? 1 : 3;
      return W16((f3 << 13) | (bits(u, 5, 3) << 10) |
                 ((uint32_t(d.rs1) - 8) << 7) | (bits(u, 7, 6) << 5) |
                 ((uint32_t(d.rd) - 8) << 2) | 0x0);
    }
    case Mn::c_lw: {
      if (!creg(d.rd) || !creg(d.rs1) || !fits_uint(d.imm, 7) || (d.imm & 3))
        return std::nullopt;
      uint32_t u = uint32_t(d.imm);
      return W16((2u << 13) | (bits(u, 5, 3) << 10) |
                 ((uint32_t(d.rs1) - 8) << 7) | (bit(u, 2) << 6) |
                 (bit(u, 6) << 5) | ((uint32_t(d.rd) - 8) << 2) | 0x0);
    }
    case Mn::c_fsd:
    case Mn::c_sd: {
      if (!creg(d.rs2) || !creg(d.rs1) || !fits_uint(d.imm, 8) || (d.imm & 7))
        return std::nullopt;
      uint32_t u = uint32_t(d.imm);
      uint32_t f3 = d.mn == Mn::c_fsd ? 5 : 7;
      return W16((f3 << 13) | (bits(u, 5, 3) << 10) |
                 ((uint32_t(d.rs1) - 8) << 7) | (bits(u, 7, 6) << 5) |
                 ((uint32_t(d.rs2) - 8) << 2) | 0x0);
    }
    case Mn::c_sw: {
      if (!creg(d.rs2) || !creg(d.rs1) || !fits_uint(d.imm, 7) || (d.imm & 3))
        return std::nullopt;
      uint32_t u = uint32_t(d.imm);
      return W16((6u << 13) | (bits(u, 5, 3) << 10) |
                 ((uint32_t(d.rs1) - 8) << 7) | (bit(u, 2) << 6) |
                 (bit(u, 6) << 5) | ((uint32_t(d.rs2) - 8) << 2) | 0x0);
    }
    case Mn::c_addi:
    case Mn::c_addiw:
    case Mn::c_li: {
      if (d.rd < 0 || !fits_sint(d.imm, 6)) return std::nullopt;
      if (d.mn == Mn::c_addiw && d.rd == 0) return std::nullopt;
      uint32_t f3 = d.mn == Mn::c_addi ? 0 : d.mn == Mn::c_addiw ? 1 : 2;
      uint32_t u = uint32_t(d.imm) & 0x3F;
      return W16((f3 << 13) | (bit(u, 5) << 12) | (uint32_t(d.rd) << 7) |
                 (bits(u, 4, 0) << 2) | 0x1);
    }
    case Mn::c_addi16sp: {
      if (!fits_sint(d.imm, 10) || (d.imm & 15) || d.imm == 0)
        return std::nullopt;
      uint32_t u = uint32_t(d.imm) & 0x3FF;
      return W16((3u << 13) | (bit(u, 9) << 12) | (2u << 7) |
                 (bit(u, 4) << 6) | (bit(u, 6) << 5) | (bits(u, 8, 7) << 3) |
                 (bit(u, 5) << 2) | 0x1);
    }
    case Mn::c_lui: {
      if (d.rd < 0 || d.rd == 2 || !fits_sint(d.imm, 6) || d.imm == 0)
        return std::nullopt;
      uint32_t u = uint32_t(d.imm) & 0x3F;
      return W16((3u << 13) | (bit(u, 5) << 12) | (uint32_t(d.rd) << 7) |
                 (bits(u, 4, 0) << 2) | 0x1);
    }
    case Mn::c_srli:
    case Mn::c_srai: {
      if (!creg(d.rd) || d.shamt > 63) return std::nullopt;
      uint32_t f2 = d.mn == Mn::c_srli ? 0 : 1;
      return W16((4u << 13) | (bit(d.shamt, 5) << 12) | (f2 << 10) |
                 ((uint32_t(d.rd) - 8) << 7) | (bits(d.shamt, 4, 0) << 2) |
                 0x1);
    }
    case Mn::c_andi: {
      if (!creg(d.rd) || !fits_sint(d.imm, 6)) return std::nullopt;
      uint32_t u = uint32_t(d.imm) & 0x3F;
      return W16((4u << 13) | (bit(u, 5) << 12) | (2u << 10) |
                 ((uint32_t(d.rd) - 8) << 7) | (bits(u, 4, 0) << 2) | 0x1);
    }
    case Mn::c_sub:
    case Mn::c_xor:
    case Mn::c_or:
    case Mn::c_and:
    case Mn::c_subw:
    case Mn::c_addw: {
      if (!creg(d.rd) || !creg(d.rs2)) return std::nullopt;
      uint32_t hi = 0, f2b = 0;
      switch (d.mn) {
        case Mn::c_sub: f2b = 0; break;
        case Mn::c_xor: f2b = 1; break;
        case Mn::c_or: f2b = 2; break;
        case Mn::c_and: f2b = 3; break;
        case Mn::c_subw: hi = 1; f2b = 0; break;
        default: hi = 1; f2b = 1; break;
      }
      return W16((4u << 13) | (hi << 12) | (3u << 10) |
                 ((uint32_t(d.rd) - 8) << 7) | (f2b << 5) |
                 ((uint32_t(d.rs2) - 8) << 2) | 0x1);
    }
    case Mn::c_j: {
      if (!fits_sint(d.imm, 12) || (d.imm & 1)) return std::nullopt;
      uint32_t u = uint32_t(d.imm) & 0xFFF;
      return W16((5u << 13) | (bit(u, 11) << 12) | (bit(u, 4) << 11) |
                 (bits(u, 9, 8) << 9) | (bit(u, 10) << 8) | (bit(u, 6) << 7) |
                 (bit(u, 7) << 6) | (bits(u, 3, 1) << 3) | (bit(u, 5) << 2) |
                 0x1);
    }
    case Mn::c_beqz:
    case Mn::c_bnez: {
      if (!creg(d.rs1) || !fits_sint(d.imm, 9) || (d.imm & 1))
        return std::nullopt;
      uint32_t u = uint32_t(d.imm) & 0x1FF;
      uint32_t f3 = d.mn == Mn::c_beqz ? 6 : 7;
      return W16((f3 << 13) | (bit(u, 8) << 12) | (bits(u, 4, 3) << 10) |
                 ((uint32_t(d.rs1) - 8) << 7) | (bits(u, 7, 6) << 5) |
                 (bits(u, 2, 1) << 3) | (bit(u, 5) << 2) | 0x1);
    }
    case Mn::c_slli: {
      if (d.rd < 0 || d.shamt > 63) return std::nullopt;
      return W16((0u << 13) | (bit(d.shamt, 5) << 12) | (uint32_t(d.rd) << 7) |
                 (bits(d.shamt, 4, 0) << 2) | 0x2);
    }
    case Mn::c_fldsp:
    case Mn::c_ldsp: {
      if (d.rd < 0 || !fits_uint(d.imm, 9) || (d.imm & 7)) return std::nullopt;
      if (d.mn == Mn::c_ldsp && d.rd == 0) return std::nullopt;
      uint32_t u = uint32_t(d.imm);
      uint32_t f3 = d.mn == Mn::c_fldsp ? 1 : 3;
      return W16((f3 << 13) | (bit(u, 5) << 12) | (uint32_t(d.rd) << 7) |
                 (bits(u, 4, 3) << 5) | (bits(u, 8, 6) << 2) | 0x2);
    }
    case Mn::c_lwsp: {
      if (d.rd <= 0 || !fits_uint(d.imm, 8) || (d.imm & 3)) return std::nullopt;
      uint32_t u = uint32_t(d.imm);
      return W16((2u << 13) | (bit(u, 5) << 12) | (uint32_t(d.rd) << 7) |
                 (bits(u, 4, 2) << 4) | (bits(u, 7, 6) << 2) | 0x2);
    }
    case Mn::c_jr: {
      if (d.rs1 <= 0) return std::nullopt;
      return W16((4u << 13) | (uint32_t(d.rs1) << 7) | 0x2);
    }
    case Mn::c_mv: {
      if (d.rd < 0 || d.rs2 <= 0) return std::nullopt;
      return W16((4u << 13) | (uint32_t(d.rd) << 7) | (uint32_t(d.rs2) << 2) |
                 0x2);
    }
    case Mn::c_ebreak: return W16(0x9002);
    case Mn::c_jalr: {
      if (d.rs1 <= 0) return std::nullopt;
      return W16((4u << 13) | (1u << 12) | (uint32_t(d.rs1) << 7) | 0x2);
    }
    case Mn::c_add: {
      if (d.rd < 0 || d.rs2 <= 0) return std::nullopt;
      return W16((4u << 13) | (1u << 12) | (uint32_t(d.rd) << 7) |
                 (uint32_t(d.rs2) << 2) | 0x2);
    }
    case Mn::c_fsdsp:
    case Mn::c_sdsp: {
      if (d.rs2 < 0 || !fits_uint(d.imm, 9) || (d.imm & 7)) return std::nullopt;
      uint32_t u = uint32_t(d.imm);
      uint32_t f3 = d.mn == Mn::c_fsdsp ? 5 : 7;
      return W16((f3 << 13) | (bits(u, 5, 3) << 10) | (bits(u, 8, 6) << 7) |
                 (uint32_t(d.rs2) << 2) | 0x2);
    }
    case Mn::c_swsp: {
      if (d.rs2 < 0 || !fits_uint(d.imm, 8) || (d.imm & 3)) return std::nullopt;
      uint32_t u = uint32_t(d.imm);
      return W16((6u << 13) | (bits(u, 5, 2) << 9) | (bits(u, 7, 6) << 7) |
                 (uint32_t(d.rs2) << 2) | 0x2);
    }
    default:
      break;
  }

  // OP-FP family: build via a table of (mn -> f7, f3-or-rm, rs2-code).
  struct FpOp { Mn mn; uint32_t f7, f3; int rs2_code; bool rm; };
  static const FpOp fp_ops[] = {
      {Mn::fadd_s, 0x00, 0, -1, true},   {Mn::fadd_d, 0x01, 0, -1, true},
      {Mn::fadd_q, 0x03, 0, -1, true},   {Mn::fsub_s, 0x04, 0, -1, true},
      {Mn::fsub_d, 0x05, 0, -1, true},   {Mn::fsub_q, 0x07, 0, -1, true},
      {Mn::fmul_s, 0x08, 0, -1, true},   {Mn::fmul_d, 0x09, 0, -1, true},
      {Mn::fmul_q, 0x0B, 0, -1, true},   {Mn::fdiv_s, 0x0C, 0, -1, true},
      {Mn::fdiv_d, 0x0D, 0, -1, true},   {Mn::fdiv_q, 0x0F, 0, -1, true},
      {Mn::fsqrt_s, 0x2C, 0, 0, true},   {Mn::fsqrt_d, 0x2D, 0, 0, true},
      {Mn::fsqrt_q, 0x2F, 0, 0, true},
      {Mn::fsgnj_s, 0x10, 0, -1, false}, {Mn::fsgnjn_s, 0x10, 1, -1, false},
      {Mn::fsgnjx_s, 0x10, 2, -1, false},
      {Mn::fsgnj_d, 0x11, 0, -1, false}, {Mn::fsgnjn_d, 0x11, 1, -1, false},
      {Mn::fsgnjx_d, 0x11, 2, -1, false},
      {Mn::fsgnj_q, 0x13, 0, -1, false}, {Mn::fsgnjn_q, 0x13, 1, -1, false},
      {Mn::fsgnjx_q, 0x13, 2, -1, false},
      {Mn::fmin_s, 0x14, 0, -1, false},  {Mn::fmax_s, 0x14, 1, -1, false},
      {Mn::fmin_d, 0x15, 0, -1, false},  {Mn::fmax_d, 0x15, 1, -1, false},
      {Mn::fmin_q, 0x17, 0, -1, false},  {Mn::fmax_q, 0x17, 1, -1, false},
      {Mn::fcvt_s_d, 0x20, 0, 1, true},  {Mn::fcvt_s_q, 0x20, 0, 3, true},
      {Mn::fcvt_d_s, 0x21, 0, 0, true},  {Mn::fcvt_d_q, 0x21, 0, 3, true},
      {Mn::fcvt_q_s, 0x23, 0, 0, true},  {Mn::fcvt_q_d, 0x23, 0, 1, true},
      {Mn::fle_s, 0x50, 0, -1, false},   {Mn::flt_s, 0x50, 1, -1, false},
      {Mn::feq_s, 0x50, 2, -1, false},
      {Mn::fle_d, 0x51, 0, -1, false},   {Mn::flt_d, 0x51, 1, -1, false},
      {Mn::feq_d, 0x51, 2, -1, false},
      {Mn::fle_q, 0x53, 0, -1, false},   {Mn::flt_q, 0x53, 1, -1, false},
      {Mn::feq_q, 0x53, 2, -1, false},
      {Mn::fcvt_w_s, 0x60, 0, 0, true},  {Mn::fcvt_wu_s, 0x60, 0, 1, true},
      {Mn::fcvt_l_s, 0x60, 0, 2, true},  {Mn::fcvt_lu_s, 0x60, 0, 3, true},
      {Mn::fcvt_w_d, 0x61, 0, 0, true},  {Mn::fcvt_wu_d, 0x61, 0, 1, true},
      {Mn::fcvt_l_d, 0x61, 0, 2, true},  {Mn::fcvt_lu_d, 0x61, 0, 3, true},
      {Mn::fcvt_w_q, 0x63, 0, 0, true},  {Mn::fcvt_wu_q, 0x63, 0, 1, true},
      {Mn::fcvt_l_q, 0x63, 0, 2, true},  {Mn::fcvt_lu_q, 0x63, 0, 3, true},
      {Mn::fcvt_s_w, 0x68, 0, 0, true},  {Mn::fcvt_s_wu, 0x68, 0, 1, true},
      {Mn::fcvt_s_l, 0x68, 0, 2, true},  {Mn::fcvt_s_lu, 0x68, 0, 3, true},
      {Mn::fcvt_d_w, 0x69, 0, 0, true},  {Mn::fcvt_d_wu, 0x69, 0, 1, true},
      {Mn::fcvt_d_l, 0x69, 0, 2, true},  {Mn::fcvt_d_lu, 0x69, 0, 3, true},
      {Mn::fcvt_q_w, 0x6B, 0, 0, true},  {Mn::fcvt_q_wu, 0x6B, 0, 1, true},
      {Mn::fcvt_q_l, 0x6B, 0, 2, true},  {Mn::fcvt_q_lu, 0x6B, 0, 3, true},
      {Mn::fmv_x_w, 0x70, 0, 0, false},  {Mn::fmv_x_d, 0x71, 0, 0, false},
      {Mn::fclass_s, 0x70, 1, 0, false}, {Mn::fclass_d, 0x71, 1, 0, false},
      {Mn::fclass_q, 0x73, 1, 0, false},
      {Mn::fmv_w_x, 0x78, 0, 0, false},  {Mn::fmv_d_x, 0x79, 0, 0, false},
  };
  for (const auto& op : fp_ops) {
    if (op.mn != d.mn) continue;
    if (d.rd < 0 || d.rs1 < 0) return std::nullopt;
    uint32_t f3 = op.rm ? d.rm : op.f3;
    if (op.rm && !rm_ok(d.rm)) return std::nullopt;
    uint32_t rs2 = op.rs2_code >= 0 ? uint32_t(op.rs2_code)
                                    : (d.rs2 < 0 ? 0xFF : uint32_t(d.rs2));
    if (rs2 == 0xFF) return std::nullopt;
    return W32((op.f7 << 25) | (rs2 << 20) | (uint32_t(d.rs1) << 15) |
               (f3 << 12) | (uint32_t(d.rd) << 7) | 0x53);
  }
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// Render
// ---------------------------------------------------------------------------

namespace {

std::string regname(int idx, bool fp, RenderStyle st) {
  if (idx < 0) return "?";
  if (st == RenderStyle::Numeric)
    return (fp ? "f" : "x") + std::to_string(idx);
  return reg_abi_name({uint8_t(idx), fp});
}

std::string imm_hex(int64_t v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "0x%llx", (unsigned long long)(v & 0xFFFFF));
  return buf;
}

std::string offset_str(int64_t v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, ".%+lld", (long long)v);
  return buf;
}

}  // namespace

std::string render(const DecodedInstr& d, RenderStyle st) {
  std::string s = mnemonic_name(d.mn);
  auto rd = [&] { return regname(d.rd, d.rd_fp, st); };
  auto rs1 = [&] { return regname(d.rs1, d.rs1_fp, st); };
  auto rs2 = [&] { return regname(d.rs2, d.rs2_fp, st); };
  auto rs3 = [&] { return regname(d.rs3, d.rs3_fp, st); };

  switch (d.mn) {
    case Mn::lui: case Mn::auipc: case Mn::c_lui:
      return s + " " + rd() + "," + imm_hex(d.imm);
    case Mn::jal: case Mn::c_j:
      if (d.mn == Mn::c_j) return s + " " + offset_str(d.imm);
      return s + " " + rd() + "," + offset_str(d.imm);
    case Mn::jalr:
      return s + " " + rd() + "," + std::to_string(d.imm) + "(" + rs1() + ")";
    case Mn::beq: case Mn::bne: case Mn::blt: case Mn::bge:
    case Mn::bltu: case Mn::bgeu:
      return s + " " + rs1() + "," + rs2() + "," + offset_str(d.imm);
    case Mn::c_beqz: case Mn::c_bnez:
      return s + " " + rs1() + "," + offset_str(d.imm);
    case Mn::lb: case Mn::lh: case Mn::lw: case Mn::ld:
    case Mn::lbu: case Mn::lhu: case Mn::lwu:
    case Mn::flw: case Mn::fld: case Mn::flq:
    case Mn::c_lw: case Mn::c_ld: case Mn::c_fld:
    case Mn::c_lwsp: case Mn::c_ldsp: case Mn::c_fldsp:
      return s + " " + rd() + "," + std::to_string(d.imm) + "(" + rs1() + ")";
    case Mn::sb: case Mn::sh: case Mn::sw: case Mn::sd:
    case Mn::fsw: case Mn::fsd: case Mn::fsq:
    case Mn::c_sw: case Mn::c_sd: case Mn::c_fsd:
    case Mn::c_swsp: case Mn::c_sdsp: case Mn::c_fsdsp:
      return s + " " + rs2() + "," + std::to_string(d.imm) + "(" + rs1() + ")";
    case Mn::slli: case Mn::srli: case Mn::srai:
    case Mn::slliw: case Mn::srliw: case Mn::sraiw:
    case Mn::c_slli: case Mn::c_srli: case Mn::c_srai:
      return s + " " + rd() + "," + rs1() + "," + std::to_string(d.shamt);
    case Mn::fence: case Mn::fence_i: case Mn::ecall: case Mn::ebreak:
    case Mn::c_ebreak:
      return s;
    case Mn::csrrw: case Mn::csrrs: case Mn::csrrc: {
      char buf[16];
      std::snprintf(buf, sizeof buf, "0x%x", d.csr);
      return s + " " + rd() + "," + buf + "," + rs1();
    }
    case Mn::csrrwi: case Mn::csrrsi: case Mn::csrrci: {
      char buf[16];
      std::snprintf(buf, sizeof buf, "0x%x", d.csr);
      return s + " " + rd() + "," + buf + "," + std::to_string(d.imm);
    }
    case Mn::c_addi4spn:
      return s + " " + rd() + ",sp," + std::to_string(d.imm);
    case Mn::c_addi16sp:
      return s + " sp," + std::to_string(d.imm);
    case Mn::c_addi: case Mn::c_addiw: case Mn::c_li: case Mn::c_andi:
      return s + " " + rd() + "," + std::to_string(d.imm);
    case Mn::c_jr: case Mn::c_jalr:
      return s + " " + rs1();
    case Mn::c_mv: case Mn::c_add:
      return s + " " + rd() + "," + rs2();
    case Mn::c_sub: case Mn::c_xor: case Mn::c_or: case Mn::c_and:
    case Mn::c_subw: case Mn::c_addw:
      return s + " " + rd() + "," + rs2();
    default:
      break;
  }

  if (uint16_t(d.mn) >= uint16_t(Mn::lr_w) &&
      uint16_t(d.mn) <= uint16_t(Mn::amomaxu_d)) {
    std::string sfx;
    if (d.aq) sfx += ".aq";
    if (d.rl) sfx += ".rl";
    if (d.mn == Mn::lr_w || d.mn == Mn::lr_d)
      return s + sfx + " " + rd() + ",(" + rs1() + ")";
    return s + sfx + " " + rd() + "," + rs2() + ",(" + rs1() + ")";
  }

  // FP ops and the remaining R-types
  std::string out = s + " " + rd();
  if (d.rs1 >= 0) out += "," + rs1();
  if (d.rs2 >= 0) out += "," + rs2();
  if (d.rs3 >= 0) out += "," + rs3();
  return out;
}

// ---------------------------------------------------------------------------
// Builders
// ---------------------------------------------------------------------------

DecodedInstr mk_rtype(Mn m, int rd, int rs1, int rs2) {
  DecodedInstr d;
  d.mn = m; d.rd = int8_t(rd); d.rs1 = int8_t(rs1); d.rs2 = int8_t(rs2);
  return d;
}

DecodedInstr mk_itype(Mn m, int rd, int rs1, int64_t imm) {
  DecodedInstr d;
  d.mn = m; d.rd = int8_t(rd); d.rs1 = int8_t(rs1);
  d.imm = imm; d.has_imm = true;
  return d;
}

DecodedInstr mk_store(Mn m, int rs1, int rs2, int64_t imm, bool rs2_fp) {
  DecodedInstr d;
  d.mn = m; d.rs1 = int8_t(rs1); d.rs2 = int8_t(rs2); d.rs2_fp = rs2_fp;
  d.imm = imm; d.has_imm = true;
  return d;
}

DecodedInstr mk_jal(int rd, int64_t offset) {
  DecodedInstr d;
  d.mn = Mn::jal; d.rd = int8_t(rd); d.imm = offset; d.has_imm = true;
  return d;
}

DecodedInstr mk_branch(Mn m, int rs1, int rs2, int64_t offset) {
  DecodedInstr d;
  d.mn = m; d.rs1 = int8_t(rs1); d.rs2 = int8_t(rs2);
  d.imm = offset; d.has_imm = true;
  return d;
}

DecodedInstr mk_lui(int rd, int64_t imm20) {
  DecodedInstr d;
  d.mn = Mn::lui; d.rd = int8_t(rd); d.imm = imm20; d.has_imm = true;
  return d;
}

const char* variant_name(Variant v) {
  switch (v) {
    case Variant::Alnum: return "alnum";
    case Variant::Hash: return "hash";
    case Variant::Slash: return "slash";
    case Variant::Tick: return "tick";
  }
  return "?";
}

bool variant_from_name(std::string_view name, Variant& out) {
  if (name == "alnum") { out = Variant::Alnum; return true; }
  if (name == "hash") { out = Variant::Hash; return true; }
  if (name == "slash") { out = Variant::Slash; return true; }
  if (name == "tick") { out = Variant::Tick; return true; }
  return false;
}

}  // namespace arv
