#include "arv/emu.hpp"

#include <bit>
#include <cmath>
#include <cstring>

namespace arv {

const char* trap_name(Trap t) {
  switch (t) {
    case Trap::None: return "none";
    case Trap::InvalidInstruction: return "invalid-instruction";
    case Trap::UnsupportedInstruction: return "unsupported-instruction";
    case Trap::Misaligned: return "misaligned";
    case Trap::OutOfRange: return "out-of-range";
    case Trap::StaleFetch: return "stale-fetch";
    case Trap::FpuOff: return "fpu-off";
    case Trap::Ecall: return "ecall";
    case Trap::Ebreak: return "ebreak";
  }
  return "?";
}

Emu::Emu(EmuConfig cfg) : cfg_(cfg) {
  mem_.assign(cfg_.mem_size, 0);
  if (cfg_.strict_icache) iflags_.assign(cfg_.mem_size, 0);
  pc_ = cfg_.mem_base;
  fpu_on_ = !cfg_.bare_metal;
  csr_[0x300] = 0;  // mstatus
}

void Emu::load(uint64_t addr, std::span<const uint8_t> bytes) {
  for (size_t i = 0; i < bytes.size(); ++i) {
    if (!in_mem(addr + i, 1)) continue;
    mem_[addr + i - cfg_.mem_base] = bytes[i];
  }
}

uint8_t Emu::read_byte(uint64_t addr) const {
  if (!in_mem(addr, 1)) return 0;
  return mem_[addr - cfg_.mem_base];
}

std::vector<uint8_t> Emu::read_bytes(uint64_t addr, size_t n) const {
  std::vector<uint8_t> out(n);
  for (size_t i = 0; i < n; ++i) out[i] = read_byte(addr + i);
  return out;
}

// All the per-instruction machinery lives here so the header stays small.
struct EmuOps {
  Emu& e;

  bool load_mem(uint64_t addr, size_t n, uint64_t& out) {
    if (e.in_serial(addr)) { out = 0; return true; }
    if (!e.in_mem(addr, n)) return false;
    uint64_t v = 0;
    for (size_t i = 0; i < n; ++i)
      v |= uint64_t(e.mem_[addr + i - e.cfg_.mem_base]) << (8 * i);
    out = v;
    return true;
  }

  bool store_mem(uint64_t addr, size_t n, uint64_t v) {
    if (e.in_serial(addr)) {
      e.serial_.push_back(char(v & 0xFF));
      return true;
    }
    if (!e.in_mem(addr, n)) return false;
    for (size_t i = 0; i < n; ++i) {
      size_t off = size_t(addr + i - e.cfg_.mem_base);
      e.mem_[off] = uint8_t(v >> (8 * i));
      if (e.cfg_.strict_icache && (e.iflags_[off] & 1)) e.iflags_[off] |= 2;
    }
    return true;
  }

  uint64_t csr_read(uint16_t a) {
    auto it = e.csr_.find(a);
    return it == e.csr_.end() ? 0 : it->second;
  }

  void csr_write(uint16_t a, uint64_t v) {
    e.csr_[a] = v;
    if (a == 0x300) e.fpu_on_ = !e.cfg_.bare_metal || ((v >> 13) & 3) != 0;
  }
};

Trap Emu::step() {
  EmuOps ops{*this};
  trap_detail.clear();

  if (pc_ & 1) {
    trap_detail = "pc misaligned";
    return Trap::Misaligned;
  }
  if (!in_mem(pc_, 2)) {
    trap_detail = "pc outside memory";
    return Trap::OutOfRange;
  }

  uint8_t b0 = mem_[pc_ - cfg_.mem_base];
  WidthClass wc = classify_width(b0);
  int width = wc == WidthClass::W16 ? 2 : 4;
  if (wc == WidthClass::Other) {
    trap_detail = "reserved length encoding";
    return Trap::InvalidInstruction;
  }
  if (!in_mem(pc_, size_t(width))) {
    trap_detail = "instruction straddles memory end";
    return Trap::OutOfRange;
  }

  if (cfg_.strict_icache) {
    for (int i = 0; i < width; ++i) {
      size_t off = size_t(pc_ + uint64_t(i) - cfg_.mem_base);
      if (iflags_[off] & 2) {
        char buf[96];
        std::snprintf(buf, sizeof buf,
                      "fetch of modified byte at 0x%llx without fence.i",
                      (unsigned long long)(pc_ + uint64_t(i)));
        trap_detail = buf;
        return Trap::StaleFetch;
      }
      iflags_[off] |= 1;
    }
  }

  InstrWord w;
  w.width = uint8_t(width);
  w.value = 0;
  for (int i = 0; i < width; ++i)
    w.value |= uint32_t(mem_[pc_ + uint64_t(i) - cfg_.mem_base]) << (8 * i);

  auto dec = decode(w);
  if (!dec) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "undefined encoding 0x%08x at 0x%llx",
                  w.value, (unsigned long long)pc_);
    trap_detail = buf;
    return Trap::InvalidInstruction;
  }
  const DecodedInstr& d = *dec;

  if (cfg_.trace) {
    std::fprintf(cfg_.trace_out, "%10llu  %08llx  %s\n",
                 (unsigned long long)steps_, (unsigned long long)pc_,
                 render(d).c_str());
  }

  uint64_t next = pc_ + uint64_t(width);
  auto xr = [&](int i) -> uint64_t { return i <= 0 ? 0 : x_[i]; };
  auto xw = [&](int i, uint64_t v) { if (i > 0) x_[i] = v; };
  auto sext32 = [](uint64_t v) { return uint64_t(int64_t(int32_t(uint32_t(v)))); };

  auto do_load = [&](int n, bool sign) -> Trap {
    uint64_t addr = xr(d.rs1) + uint64_t(d.imm);
    uint64_t v;
    if (!ops.load_mem(addr, size_t(n), v)) {
      char buf[64];
      std::snprintf(buf, sizeof buf, "load at 0x%llx out of range",
                    (unsigned long long)addr);
      trap_detail = buf;
      return Trap::OutOfRange;
    }
    if (sign) {
      int sh = 64 - 8 * n;
      v = uint64_t(int64_t(v << sh) >> sh);
    }
    xw(d.rd, v);
    return Trap::None;
  };
  auto do_store = [&](int n) -> Trap {
    uint64_t addr = xr(d.rs1) + uint64_t(d.imm);
    if (!ops.store_mem(addr, size_t(n), xr(d.rs2))) {
      char buf[64];
      std::snprintf(buf, sizeof buf, "store at 0x%llx out of range",
                    (unsigned long long)addr);
      trap_detail = buf;
      return Trap::OutOfRange;
    }
    return Trap::None;
  };
  auto do_amo = [&](int n, bool is_or) -> Trap {
    uint64_t addr = xr(d.rs1);
    if (addr % uint64_t(n)) {
      trap_detail = "amo address not naturally aligned";
      return Trap::Misaligned;
    }
    uint64_t old;
    if (!ops.load_mem(addr, size_t(n), old)) {
      trap_detail = "amo address out of range";
      return Trap::OutOfRange;
    }
    uint64_t src = xr(d.rs2);
    uint64_t res = is_or ? (old | src) : (old & src);
    if (!ops.store_mem(addr, size_t(n), res)) return Trap::OutOfRange;
    xw(d.rd, n == 4 ? sext32(old) : old);
    return Trap::None;
  };
  auto as_f64 = [&](int i) { return std::bit_cast<double>(f_[i]); };

  Trap t = Trap::None;
  switch (d.mn) {
    case Mn::lui: xw(d.rd, uint64_t(int64_t(int32_t(uint32_t(d.imm) << 12)))); break;
    case Mn::auipc: xw(d.rd, pc_ + uint64_t(int64_t(int32_t(uint32_t(d.imm) << 12)))); break;
    case Mn::jal:
      xw(d.rd, next);
      next = pc_ + uint64_t(d.imm);
      break;
    case Mn::c_j:
      next = pc_ + uint64_t(d.imm);
      break;
    case Mn::jalr: {
      uint64_t tgt = (xr(d.rs1) + uint64_t(d.imm)) & ~1ull;
      xw(d.rd, next);
      next = tgt;
      break;
    }
    case Mn::c_jr: next = xr(d.rs1) & ~1ull; break;
    case Mn::c_jalr: {
      uint64_t tgt = xr(d.rs1) & ~1ull;
      xw(1, next);
      next = tgt;
      break;
    }
    case Mn::beq: if (xr(d.rs1) == xr(d.rs2)) next = pc_ + uint64_t(d.imm); break;
    case Mn::bne: if (xr(d.rs1) != xr(d.rs2)) next = pc_ + uint64_t(d.imm); break;
    case Mn::blt: if (int64_t(xr(d.rs1)) < int64_t(xr(d.rs2))) next = pc_ + uint64_t(d.imm); break;
    case Mn::bge: if (int64_t(xr(d.rs1)) >= int64_t(xr(d.rs2))) next = pc_ + uint64_t(d.imm); break;
    case Mn::bltu: if (xr(d.rs1) < xr(d.rs2)) next = pc_ + uint64_t(d.imm); break;
    case Mn::bgeu: if (xr(d.rs1) >= xr(d.rs2)) next = pc_ + uint64_t(d.imm); break;
    case Mn::c_beqz: if (xr(d.rs1) == 0) next = pc_ + uint64_t(d.imm); break;
    case Mn::c_bnez: if (xr(d.rs1) != 0) next = pc_ + uint64_t(d.imm); break;
    case Mn::lb: t = do_load(1, true); break;
    case Mn::lh: t = do_load(2, true); break;
    case Mn::lw: case Mn::c_lw: case Mn::c_lwsp: t = do_load(4, true); break;
    case Mn::ld: case Mn::c_ld: case Mn::c_ldsp: t = do_load(8, true); break;
    case Mn::lbu: t = do_load(1, false); break;
    case Mn::lhu: t = do_load(2, false); break;
    case Mn::lwu: t = do_load(4, false); break;
    case Mn::sb: t = do_store(1); break;
    case Mn::sh: t = do_store(2); break;
    case Mn::sw: case Mn::c_sw: case Mn::c_swsp: t = do_store(4); break;
    case Mn::sd: case Mn::c_sd: case Mn::c_sdsp: t = do_store(8); break;
    case Mn::addi: xw(d.rd, xr(d.rs1) + uint64_t(d.imm)); break;
    case Mn::slti: xw(d.rd, int64_t(xr(d.rs1)) < d.imm ? 1 : 0); break;
    case Mn::sltiu: xw(d.rd, xr(d.rs1) < uint64_t(d.imm) ? 1 : 0); break;
    case Mn::xori: xw(d.rd, xr(d.rs1) ^ uint64_t(d.imm)); break;
    case Mn::ori: xw(d.rd, xr(d.rs1) | uint64_t(d.imm)); break;
    case Mn::andi: case Mn::c_andi: xw(d.rd, xr(d.rs1) & uint64_t(d.imm)); break;
    case Mn::slli: case Mn::c_slli: xw(d.rd, xr(d.rs1) << d.shamt); break;
    case Mn::srli: case Mn::c_srli: xw(d.rd, xr(d.rs1) >> d.shamt); break;
    case Mn::srai: case Mn::c_srai: xw(d.rd, uint64_t(int64_t(xr(d.rs1)) >> d.shamt)); break;
    case Mn::addiw: case Mn::c_addiw: xw(d.rd, sext32(xr(d.rs1) + uint64_t(d.imm))); break;
    case Mn::slliw: xw(d.rd, sext32(uint32_t(xr(d.rs1)) << d.shamt)); break;
    case Mn::srliw: xw(d.rd, sext32(uint32_t(xr(d.rs1)) >> d.shamt)); break;
    case Mn::sraiw: xw(d.rd, uint64_t(int64_t(int32_t(uint32_t(xr(d.rs1)))) >> d.shamt)); break;
    case Mn::add: xw(d.rd, xr(d.rs1) + xr(d.rs2)); break;
    case Mn::sub: xw(d.rd, xr(d.rs1) - xr(d.rs2)); break;
    case Mn::sll: xw(d.rd, xr(d.rs1) << (xr(d.rs2) & 63)); break;
    case Mn::slt: xw(d.rd, int64_t(xr(d.rs1)) < int64_t(xr(d.rs2)) ? 1 : 0); break;
    case Mn::sltu: xw(d.rd, xr(d.rs1) < xr(d.rs2) ? 1 : 0); break;
    case Mn::xorr: case Mn::c_xor: xw(d.rd, xr(d.rs1) ^ xr(d.rs2)); break;
    case Mn::srl: xw(d.rd, xr(d.rs1) >> (xr(d.rs2) & 63)); break;
    case Mn::sra: xw(d.rd, uint64_t(int64_t(xr(d.rs1)) >> (xr(d.rs2) & 63))); break;
    case Mn::orr: case Mn::c_or: xw(d.rd, xr(d.rs1) | xr(d.rs2)); break;
    case Mn::andr: case Mn::c_and: xw(d.rd, xr(d.rs1) & xr(d.rs2)); break;
    case Mn::addw: case Mn::c_addw: xw(d.rd, sext32(xr(d.rs1) + xr(d.rs2))); break;
    case Mn::subw: case Mn::c_subw: xw(d.rd, sext32(xr(d.rs1) - xr(d.rs2))); break;
    case Mn::sllw: xw(d.rd, sext32(uint32_t(xr(d.rs1)) << (xr(d.rs2) & 31))); break;
    case Mn::srlw: xw(d.rd, sext32(uint32_t(xr(d.rs1)) >> (xr(d.rs2) & 31))); break;
    case Mn::sraw: xw(d.rd, uint64_t(int64_t(int32_t(uint32_t(xr(d.rs1)))) >> (xr(d.rs2) & 31))); break;
    case Mn::c_sub: xw(d.rd, xr(d.rd) - xr(d.rs2)); break;
    case Mn::c_addi: xw(d.rd, xr(d.rd) + uint64_t(d.imm)); break;
    case Mn::c_addi4spn: xw(d.rd, xr(2) + uint64_t(d.imm)); break;
    case Mn::c_addi16sp: xw(2, xr(2) + uint64_t(d.imm)); break;
    case Mn::c_li: xw(d.rd, uint64_t(d.imm)); break;
    case Mn::c_lui: xw(d.rd, uint64_t(d.imm << 12)); break;
    case Mn::c_mv: xw(d.rd, xr(d.rs2)); break;
    case Mn::c_add: xw(d.rd, xr(d.rd) + xr(d.rs2)); break;
    case Mn::mul: xw(d.rd, xr(d.rs1) * xr(d.rs2)); break;
    case Mn::mulh: xw(d.rd, uint64_t((__int128(int64_t(xr(d.rs1))) * __int128(int64_t(xr(d.rs2)))) >> 64)); break;
    case Mn::mulhsu: xw(d.rd, uint64_t((__int128(int64_t(xr(d.rs1))) * (unsigned __int128)(xr(d.rs2))) >> 64)); break;
    case Mn::mulhu: xw(d.rd, uint64_t(((unsigned __int128)(xr(d.rs1)) * (unsigned __int128)(xr(d.rs2))) >> 64)); break;
    case Mn::divi: {
      int64_t a = int64_t(xr(d.rs1)), b = int64_t(xr(d.rs2));
      xw(d.rd, uint64_t(b == 0 ? -1 : (a == INT64_MIN && b == -1) ? a : a / b));
      break;
    }
    case Mn::divu: xw(d.rd, xr(d.rs2) == 0 ? ~0ull : xr(d.rs1) / xr(d.rs2)); break;
    case Mn::rem: {
      int64_t a = int64_t(xr(d.rs1)), b = int64_t(xr(d.rs2));
      xw(d.rd, uint64_t(b == 0 ? a : (a == INT64_MIN && b == -1) ? 0 : a % b));
      break;
    }
    case Mn::remu: xw(d.rd, xr(d.rs2) == 0 ? xr(d.rs1) : xr(d.rs1) % xr(d.rs2)); break;
    case Mn::mulw: xw(d.rd, sext32(xr(d.rs1) * xr(d.rs2))); break;
    case Mn::divw: {
      int32_t a = int32_t(uint32_t(xr(d.rs1))), b = int32_t(uint32_t(xr(d.rs2)));
      xw(d.rd, uint64_t(int64_t(b == 0 ? -1 : (a == INT32_MIN && b == -1) ? a : a / b)));
      break;
    }
    case Mn::divuw: {
      uint32_t a = uint32_t(xr(d.rs1)), b = uint32_t(xr(d.rs2));
      xw(d.rd, sext32(b == 0 ? ~0u : a / b));
      break;
    }
    case Mn::remw: {
      int32_t a = int32_t(uint32_t(xr(d.rs1))), b = int32_t(uint32_t(xr(d.rs2)));
      xw(d.rd, uint64_t(int64_t(b == 0 ? a : (a == INT32_MIN && b == -1) ? 0 : a % b)));
      break;
    }
    case Mn::remuw: {
      uint32_t a = uint32_t(xr(d.rs1)), b = uint32_t(xr(d.rs2));
      xw(d.rd, sext32(b == 0 ? a : a % b));
      break;
    }
    case Mn::fence: break;
    case Mn::fence_i:
      if (cfg_.strict_icache)
        for (auto& fl : iflags_) fl &= 1;
      break;
    case Mn::ecall: trap_detail = "ecall"; return Trap::Ecall;
    case Mn::ebreak: case Mn::c_ebreak: trap_detail = "ebreak"; return Trap::Ebreak;
    case Mn::csrrw: case Mn::csrrs: case Mn::csrrc: {
      uint64_t old = ops.csr_read(d.csr);
      uint64_t src = xr(d.rs1);
      uint64_t nv = d.mn == Mn::csrrw ? src
                    : d.mn == Mn::csrrs ? (old | src)
                                        : (old & ~src);
      if (d.mn == Mn::csrrw || d.rs1 != 0) ops.csr_write(d.csr, nv);
      xw(d.rd, old);
      break;
    }
    case Mn::csrrwi: case Mn::csrrsi: case Mn::csrrci: {
      uint64_t old = ops.csr_read(d.csr);
      uint64_t src = uint64_t(d.imm);
      uint64_t nv = d.mn == Mn::csrrwi ? src
                    : d.mn == Mn::csrrsi ? (old | src)
                                         : (old & ~src);
      if (d.mn == Mn::csrrwi || d.imm != 0) ops.csr_write(d.csr, nv);
      xw(d.rd, old);
      break;
    }
    case Mn::amoor_w: t = do_amo(4, true); break;
    case Mn::amoor_d: t = do_amo(8, true); break;
    case Mn::amoand_w: t = do_amo(4, false); break;
    case Mn::amoand_d: t = do_amo(8, false); break;
    case Mn::fld: case Mn::c_fld: case Mn::c_fldsp: {
      if (!fpu_on_) { trap_detail = "fp load with FPU off"; return Trap::FpuOff; }
      uint64_t addr = xr(d.rs1) + uint64_t(d.imm);
      uint64_t v;
      if (!ops.load_mem(addr, 8, v)) {
        trap_detail = "fld out of range";
        return Trap::OutOfRange;
      }
      f_[d.rd] = v;
      break;
    }
    case Mn::fsd: case Mn::c_fsd: case Mn::c_fsdsp: {
      if (!fpu_on_) { trap_detail = "fp store with FPU off"; return Trap::FpuOff; }
      uint64_t addr = xr(d.rs1) + uint64_t(d.imm);
      if (!ops.store_mem(addr, 8, f_[d.rs2])) {
        trap_detail = "fsd out of range";
        return Trap::OutOfRange;
      }
      break;
    }
    case Mn::fmadd_d: {
      if (!fpu_on_) { trap_detail = "fmadd with FPU off"; return Trap::FpuOff; }
      double r = std::fma(as_f64(d.rs1), as_f64(d.rs2), as_f64(d.rs3));
      f_[d.rd] = std::bit_cast<uint64_t>(r);
      break;
    }
    case Mn::fsgnjx_d: {  // fabs.d when rs1 == rs2
      if (!fpu_on_) { trap_detail = "fp op with FPU off"; return Trap::FpuOff; }
      uint64_t sign = (f_[d.rs1] ^ f_[d.rs2]) & (1ull << 63);
      f_[d.rd] = (f_[d.rs1] & ~(1ull << 63)) | sign;
      break;
    }
    case Mn::fsgnj_d: {
      if (!fpu_on_) { trap_detail = "fp op with FPU off"; return Trap::FpuOff; }
      f_[d.rd] = (f_[d.rs1] & ~(1ull << 63)) | (f_[d.rs2] & (1ull << 63));
      break;
    }
    case Mn::fmv_x_d:
      if (!fpu_on_) { trap_detail = "fp op with FPU off"; return Trap::FpuOff; }
      xw(d.rd, f_[d.rs1]);
      break;
    case Mn::fmv_d_x:
      if (!fpu_on_) { trap_detail = "fp op with FPU off"; return Trap::FpuOff; }
      f_[d.rd] = xr(d.rs1);
      break;
    default: {
      char buf[64];
      std::snprintf(buf, sizeof buf, "unimplemented: %s",
                    mnemonic_name(d.mn));
      trap_detail = buf;
      return Trap::UnsupportedInstruction;
    }
  }
  if (t != Trap::None) return t;

  pc_ = next;
  ++steps_;
  return Trap::None;
}

RunResult Emu::run(uint64_t max_steps, std::optional<uint64_t> stop_pc) {
  if (max_steps == 0) max_steps = cfg_.max_steps;
  RunResult r;
  for (uint64_t i = 0; i < max_steps; ++i) {
    if (stop_pc && pc_ == *stop_pc) {
      r.reason = HaltReason::StopPc;
      r.pc = pc_;
      r.steps = steps_;
      return r;
    }
    if (cfg_.sentinel && pc_ == cfg_.sentinel) {
      r.reason = HaltReason::Sentinel;
      r.pc = pc_;
      r.steps = steps_;
      return r;
    }
    // Exit marker: `j .` ends the run cleanly (j-self or c.j-self).
    if (in_mem(pc_, 4)) {
      uint32_t v = 0;
      for (int k = 0; k < 4; ++k)
        v |= uint32_t(mem_[pc_ + uint64_t(k) - cfg_.mem_base]) << (8 * k);
      if (v == 0x0000006F) {
        r.reason = HaltReason::ExitMarker;
        r.pc = pc_;
        r.steps = steps_;
        return r;
      }
      if (uint16_t(v) == 0xA001) {
        r.reason = HaltReason::ExitMarker;
        r.pc = pc_;
        r.steps = steps_;
        return r;
      }
    }
    Trap t = step();
    if (t != Trap::None) {
      r.reason = HaltReason::Trapped;
      r.trap = t;
      r.pc = pc_;
      r.steps = steps_;
      r.detail = trap_detail;
      return r;
    }
  }
  r.reason = HaltReason::StepBudget;
  r.pc = pc_;
  r.steps = steps_;
  r.detail = "step budget exceeded";
  return r;
}

}  // namespace arv
