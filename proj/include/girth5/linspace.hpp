#pragma once

#include <functional>
#include <map>
#include <vector>

#include "girth5/graph.hpp"

namespace girth5 {

/// Block system on points 0..n_points-1; prelinear when every pair of points
/// lies in at most one block. Blocks are kept sorted, the block list too.
struct LinearSpace {
  int n_points = 0;
  std::vector<std::vector<int>> blocks;

  bool operator==(const LinearSpace&) const = default;
};

/// Pairwise intersections <= 1 and block sizes >= 2.
bool is_prelinear(const LinearSpace& ls);

struct PartitionBlocks {
  LinearSpace space;        // on the points V \ V1, in original vertex ids
  bool valid = false;       // prelinear and no block contains an adjacent pair
};

/// One block per vertex of v1: its neighbours outside v1 (blocks of size < 2
/// are dropped). valid is false exactly when the girth-5 consequences fail.
PartitionBlocks blocks_from_partition(const Graph& g, const std::vector<int>& v1);

/// floor(v * floor((v-1)/(k-1)) / k)
int packing_upper_bound(int k, int v);

/// Exact maximum packing numbers, 3 <= k <= 6, 4 <= v <= 28.
int packing_lookup(int k, int v);

struct RegularityProfile {
  std::map<int, int> reg;         // point -> number of blocks containing it
  std::map<int, int> deg_counts;  // regularity value -> number of points
};

RegularityProfile regularity_profile(const LinearSpace& ls);

struct BlockWeights {
  std::vector<int> weights;           // wt(b) = sum of point regularities
  std::vector<int> intersect_counts;  // blocks met by b
  long long weight_sum = 0;           // sum of wt(b)
  long long degree_square_sum = 0;    // sum of i^2 * deg_i
  bool intersect_identity = true;     // b meets wt(b)-|b| others, wt <= |B|+|b|-1
};

/// Throws if the space is not prelinear.
BlockWeights block_weights(const LinearSpace& ls);

/// 12 points, 8 blocks of size 4: do all blocks pairwise intersect?
bool check_lemma_12_1(const LinearSpace& ls);

struct Lemma13Result {
  bool has_3_parallel = false;  // three pairwise disjoint blocks
  int parallel_pair_count = 0;  // disjoint pairs
};

/// 13 points, 9 blocks of size 4.
Lemma13Result check_lemma_13_1(const LinearSpace& ls);

enum class Lemma16Profile {
  kThreeTwelveOne,  // (deg1,deg2,deg3) = (3,12,1)
  kFifteenTwos,     // deg2 = 15, nothing else
  kTwoFourteen,     // (deg1,deg2) = (2,14)
  kOther,
};

/// At most 16 points, 6 blocks of size 5.
Lemma16Profile check_lemma_16_1(const LinearSpace& ls);

/// Isomorph-free orderly generation of all packings with exactly n_blocks
/// blocks of size k on n_points points (unused points allowed). Spaces are
/// produced as lex-least orbit representatives in lexicographic order; the
/// visitor returns false to stop early. Guarded to n_points <= 16,
/// n_blocks <= 26, k <= 6.
void enumerate_packings(int n_points, int k, int n_blocks,
                        const std::function<bool(const LinearSpace&)>& visit);

std::vector<LinearSpace> enumerate_packings(int n_points, int k, int n_blocks);

}  // namespace girth5
