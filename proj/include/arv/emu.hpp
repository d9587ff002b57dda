#pragma once

#include <cstdint>
#include <cstdio>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "arv/isa.hpp"

namespace arv {

// MMIO serial device (QEMU sifive_u style): stores to this window append
// their low byte to the serial output buffer.
constexpr uint64_t kSerialBase = 0x10013000;
constexpr uint64_t kSerialSize = 0x100;

enum class Trap : uint8_t {
  None,
  InvalidInstruction,
  UnsupportedInstruction,
  Misaligned,
  OutOfRange,
  StaleFetch,   // strict icache: fetched bytes written since last fence.i
  FpuOff,
  Ecall,
  Ebreak,
};

enum class HaltReason : uint8_t {
  Running,
  ExitMarker,   // executed `j .` (jal x0,0 / c.j 0)
  Sentinel,     // pc reached the configured sentinel address
  StopPc,       // pc reached the caller-requested stop address
  Trapped,
  StepBudget,
};

const char* trap_name(Trap t);

struct EmuConfig {
  uint64_t mem_base = 0x80000000;
  size_t mem_size = 1 << 20;
  bool strict_icache = true;
  bool bare_metal = false;  // FPU disabled until an mstatus write enables it
  uint64_t sentinel = 0;    // 0 = unset
  bool trace = false;
  FILE* trace_out = stderr;
  uint64_t max_steps = 10'000'000;
};

struct RunResult {
  HaltReason reason = HaltReason::Running;
  Trap trap = Trap::None;
  uint64_t pc = 0;
  uint64_t steps = 0;
  std::string detail;
};

class Emu {
 public:
  explicit Emu(EmuConfig cfg = {});

  void load(uint64_t addr, std::span<const uint8_t> bytes);
  void set_pc(uint64_t pc) { pc_ = pc; }
  uint64_t pc() const { return pc_; }
  uint64_t get_x(int i) const { return x_[i & 31]; }
  void set_x(int i, uint64_t v) { if (i & 31) x_[i & 31] = v; }
  uint64_t get_f(int i) const { return f_[i & 31]; }
  void set_f(int i, uint64_t v) { f_[i & 31] = v; }
  const std::string& serial() const { return serial_; }
  uint64_t steps() const { return steps_; }
  const EmuConfig& config() const { return cfg_; }

  uint8_t read_byte(uint64_t addr) const;
  std::vector<uint8_t> read_bytes(uint64_t addr, size_t n) const;

  // Executes one instruction. Returns Trap::None on success.
  Trap step();

  // Runs until an exit condition. stop_pc (if set) halts cleanly when the
  // next instruction to execute is at that address.
  RunResult run(uint64_t max_steps = 0,
                std::optional<uint64_t> stop_pc = std::nullopt);

  std::string trap_detail;  // populated on trap

 private:
  friend struct EmuOps;
  EmuConfig cfg_;
  uint64_t x_[32] = {};
  uint64_t f_[32] = {};
  uint64_t pc_ = 0;
  std::vector<uint8_t> mem_;
  std::vector<uint8_t> iflags_;  // bit0: fetched; bit1: stale
  std::map<uint16_t, uint64_t> csr_;
  std::string serial_;
  uint64_t steps_ = 0;
  bool fpu_on_ = true;

  bool in_mem(uint64_t addr, size_t n) const {
    return addr >= cfg_.mem_base && addr + n <= cfg_.mem_base + mem_.size();
  }
  bool in_serial(uint64_t addr) const {
    return addr >= kSerialBase && addr < kSerialBase + kSerialSize;
  }
};

}  // namespace arv
