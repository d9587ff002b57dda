#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace arv {

// A 16- or 32-bit instruction encoding candidate. `value` holds the
// little-endian word; bytes() renders it in memory order.
struct InstrWord {
  uint8_t width = 4;  // bytes: 2 or 4
  uint32_t value = 0;

  static InstrWord half(uint16_t v) { return {2, v}; }
  static InstrWord word(uint32_t v) { return {4, v}; }

  static InstrWord from_bytes(std::span<const uint8_t> b) {
    InstrWord w;
    w.width = uint8_t(b.size());
    w.value = 0;
    for (size_t i = 0; i < b.size(); ++i) w.value |= uint32_t(b[i]) << (8 * i);
    return w;
  }

  std::array<uint8_t, 4> bytes() const {
    return {uint8_t(value), uint8_t(value >> 8), uint8_t(value >> 16),
            uint8_t(value >> 24)};
  }

  bool operator==(const InstrWord&) const = default;
};

enum class WidthClass : uint8_t { W16, W32, Other };

// bits[1:0] != 11 => 16-bit; bits[4:0] = bbb11, bbb != 111 => 32-bit.
constexpr WidthClass classify_width(uint8_t first_byte) {
  if ((first_byte & 0x3) != 0x3) return WidthClass::W16;
  if ((first_byte & 0x1F) != 0x1F) return WidthClass::W32;
  return WidthClass::Other;
}

enum class Ext : uint8_t { I, M, A, F, D, Q, C, Zifencei, Zicsr };

enum class Mn : uint16_t {
  // RV64I
  lui, auipc, jal, jalr,
  beq, bne, blt, bge, bltu, bgeu,
  lb, lh, lw, ld, lbu, lhu, lwu,
  sb, sh, sw, sd,
  addi, slti, sltiu, xori, ori, andi, slli, srli, srai,
  add, sub, sll, slt, sltu, xorr, srl, sra, orr, andr,
  addiw, slliw, srliw, sraiw, addw, subw, sllw, srlw, sraw,
  fence, fence_i, ecall, ebreak,
  // Zicsr
  csrrw, csrrs, csrrc, csrrwi, csrrsi, csrrci,
  // M
  mul, mulh, mulhsu, mulhu, divi, divu, rem, remu,
  mulw, divw, divuw, remw, remuw,
  // A (w/d)
  lr_w, sc_w, amoswap_w, amoadd_w, amoxor_w, amoand_w, amoor_w,
  amomin_w, amomax_w, amominu_w, amomaxu_w,
  lr_d, sc_d, amoswap_d, amoadd_d, amoxor_d, amoand_d, amoor_d,
  amomin_d, amomax_d, amominu_d, amomaxu_d,
  // F
  flw, fsw,
  fmadd_s, fmsub_s, fnmsub_s, fnmadd_s,
  fadd_s, fsub_s, fmul_s, fdiv_s, fsqrt_s,
  fsgnj_s, fsgnjn_s, fsgnjx_s, fmin_s, fmax_s,
  fcvt_w_s, fcvt_wu_s, fcvt_l_s, fcvt_lu_s,
  fcvt_s_w, fcvt_s_wu, fcvt_s_l, fcvt_s_lu,
  fmv_x_w, fmv_w_x, feq_s, flt_s, fle_s, fclass_s,
  // D
  fld, fsd,
  fmadd_d, fmsub_d, fnmsub_d, fnmadd_d,
  fadd_d, fsub_d, fmul_d, fdiv_d, fsqrt_d,
  fsgnj_d, fsgnjn_d, fsgnjx_d, fmin_d, fmax_d,
  fcvt_s_d, fcvt_d_s,
  fcvt_w_d, fcvt_wu_d, fcvt_l_d, fcvt_lu_d,
  fcvt_d_w, fcvt_d_wu, fcvt_d_l, fcvt_d_lu,
  fmv_x_d, fmv_d_x, feq_d, flt_d, fle_d, fclass_d,
  // Q (decoded for validity; never executed or emitted)
  flq, fsq,
  fmadd_q, fmsub_q, fnmsub_q, fnmadd_q,
  fadd_q, fsub_q, fmul_q, fdiv_q, fsqrt_q,
  fsgnj_q, fsgnjn_q, fsgnjx_q, fmin_q, fmax_q,
  fcvt_s_q, fcvt_q_s, fcvt_d_q, fcvt_q_d,
  fcvt_w_q, fcvt_wu_q, fcvt_l_q, fcvt_lu_q,
  fcvt_q_w, fcvt_q_wu, fcvt_q_l, fcvt_q_lu,
  feq_q, flt_q, fle_q, fclass_q,
  // C
  c_addi4spn, c_fld, c_lw, c_ld, c_fsd, c_sw, c_sd,
  c_addi, c_addiw, c_li, c_addi16sp, c_lui,
  c_srli, c_srai, c_andi,
  c_sub, c_xor, c_or, c_and, c_subw, c_addw,
  c_j, c_beqz, c_bnez,
  c_slli, c_fldsp, c_lwsp, c_ldsp,
  c_jr, c_mv, c_ebreak, c_jalr, c_add,
  c_fsdsp, c_swsp, c_sdsp,
  COUNT
};

const char* mnemonic_name(Mn m);
Ext mnemonic_ext(Mn m);

// Register reference. Integer bank indices 0..31, float bank 0..31.
struct Reg {
  uint8_t idx = 0;
  bool fp = false;
  bool operator==(const Reg&) const = default;
};

const char* reg_abi_name(Reg r);

// Decoded instruction. Fixed operand slots; -1 idx marks an absent slot.
struct DecodedInstr {
  Mn mn{};
  int8_t rd = -1, rs1 = -1, rs2 = -1, rs3 = -1;  // reg indices, -1 = none
  bool rd_fp = false, rs1_fp = false, rs2_fp = false, rs3_fp = false;
  int64_t imm = 0;
  bool has_imm = false;
  uint8_t shamt = 0;
  bool has_shamt = false;
  uint16_t csr = 0;
  bool has_csr = false;
  uint8_t rm = 0;       // rounding mode field for FP ops
  bool has_rm = false;
  bool aq = false, rl = false;
  bool compressed = false;
  bool hint = false;  // architectural no-op encoding (e.g. writes to x0)

  bool operator==(const DecodedInstr&) const = default;
};

// Decode per RISC-V ISA manual v2.2, RV64GC + Zifencei + Zicsr.
// Returns nullopt for bit patterns that map to no defined instruction.
std::optional<DecodedInstr> decode(InstrWord w);

// Inverse of decode. width_pref: 2, 4, or 0 = any (narrowest wins).
std::optional<InstrWord> encode(const DecodedInstr& in, int width_pref = 0);

enum class RenderStyle { Abi, Numeric };
std::string render(const DecodedInstr& d, RenderStyle style = RenderStyle::Abi);

// Convenience builders for the handful of shapes the generators emit.
DecodedInstr mk_rtype(Mn m, int rd, int rs1, int rs2);
DecodedInstr mk_itype(Mn m, int rd, int rs1, int64_t imm);
DecodedInstr mk_store(Mn m, int rs1, int rs2, int64_t imm, bool rs2_fp = false);
DecodedInstr mk_jal(int rd, int64_t offset);
DecodedInstr mk_branch(Mn m, int rs1, int rs2, int64_t offset);
DecodedInstr mk_lui(int rd, int64_t imm20);

}  // namespace arv
