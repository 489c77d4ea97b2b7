#pragma once

#include <memory>
#include <string>
#include <utility>
#include <vector>

namespace galord {

// Index into the flat variable array of a VarTable.  Block variables come
// first (block by block), central parameters (q, u) after.
using VarId = int;

struct BlockSpec {
  int size = 0;
  bool laurent = false;  // negative exponents permitted; fixed at construction
};

/// Ordered table of variables: a list of blocks plus optional central
/// parameters q and u.  q is Laurent (invertible), u is not.  The fixed
/// variable order (block major, centrals last) underlies the canonical
/// graded-lexicographic term order.
class VarTable {
 public:
  VarTable(std::vector<BlockSpec> blocks, bool with_q, bool with_u);

  int block_count() const { return static_cast<int>(blocks_.size()); }
  const BlockSpec& block(int b) const { return blocks_[b]; }
  int block_size(int b) const { return blocks_[b].size; }

  // 0-based block and in-block index.
  VarId var(int block, int index) const;
  bool is_block_var(VarId v) const { return v < n_block_vars_; }
  // (block, index) for a block variable; asserts otherwise.
  std::pair<int, int> block_index(VarId v) const;

  bool has_q() const { return q_ >= 0; }
  bool has_u() const { return u_ >= 0; }
  VarId q() const { return q_; }
  VarId u() const { return u_; }

  // True when negative exponents are allowed on v (laurent blocks and q).
  bool laurent_ok(VarId v) const;

  int var_count() const { return n_vars_; }
  int block_var_count() const { return n_block_vars_; }

  // "x[k,i]" (1-based; "x[i]" for single-block tables), "q", "u".
  std::string var_name(VarId v) const;

  bool operator==(const VarTable& o) const = default;

 private:
  std::vector<BlockSpec> blocks_;
  std::vector<int> block_start_;
  int n_block_vars_ = 0;
  int n_vars_ = 0;
  VarId q_ = -1;
  VarId u_ = -1;
};

using VarTablePtr = std::shared_ptr<const VarTable>;

VarTablePtr make_vartable(std::vector<BlockSpec> blocks, bool with_q = false,
                          bool with_u = false);

}  // namespace galord
