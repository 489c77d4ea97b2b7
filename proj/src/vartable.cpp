#include "galord/vartable.hpp"

#include <cassert>

#include "galord/errors.hpp"

namespace galord {

VarTable::VarTable(std::vector<BlockSpec> blocks, bool with_q, bool with_u)
    : blocks_(std::move(blocks)) {
  if (blocks_.empty()) throw ConfigError("VarTable needs at least one block");
  block_start_.reserve(blocks_.size());
  for (const auto& b : blocks_) {
    if (b.size <= 0) throw ConfigError("block size must be positive");
    block_start_.push_back(n_block_vars_);
    n_block_vars_ += b.size;
  }
  n_vars_ = n_block_vars_;
  if (with_q) q_ = n_vars_++;
  if (with_u) u_ = n_vars_++;
}

VarId VarTable::var(int block, int index) const {
  assert(block >= 0 && block < block_count());
  assert(index >= 0 && index < blocks_[block].size);
  return block_start_[block] + index;
}

std::pair<int, int> VarTable::block_index(VarId v) const {
  assert(is_block_var(v));
  int b = block_count() - 1;
  while (block_start_[b] > v) --b;
  return {b, v - block_start_[b]};
}

bool VarTable::laurent_ok(VarId v) const {
  if (v == q_) return true;
  if (v == u_) return false;
  return blocks_[block_index(v).first].laurent;
}

std::string VarTable::var_name(VarId v) const {
  if (v == q_) return "q";
  if (v == u_) return "u";
  auto [b, i] = block_index(v);
  if (block_count() == 1) return "x[" + std::to_string(i + 1) + "]";
  return "x[" + std::to_string(b + 1) + "," + std::to_string(i + 1) + "]";
}

VarTablePtr make_vartable(std::vector<BlockSpec> blocks, bool with_q, bool with_u) {
  return std::make_shared<const VarTable>(std::move(blocks), with_q, with_u);
}

}  // namespace galord
