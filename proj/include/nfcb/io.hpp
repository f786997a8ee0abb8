#pragma once

#include <iosfwd>
#include <string>

#include "nfcb/upper_codebook.hpp"

namespace nfcb {

/// Binary codebook container ("NFCB", versioned, raw little-endian doubles;
/// round-trips are bit-exact). Hierarchical files embed the children table
/// and the bottom codebook.
void save_codebook(const std::string& path, const LowerCodebook& cb);
void save_codebook(const std::string& path, const HierarchicalCodebook& hier);
LowerCodebook load_lower_codebook(const std::string& path);
HierarchicalCodebook load_hierarchical_codebook(const std::string& path);

/// True when the file holds a hierarchical codebook.
bool codebook_file_is_hierarchical(const std::string& path);

/// CSV: one row per codeword
///   level,ring,angle,theta,r,re_1,im_1,...,re_nw,im_nw
/// (level is n_lv for the bottom codebook, printed with 17 significant digits).
void export_codebook_csv(const std::string& path, const LowerCodebook& cb,
                         int level = 1);
void export_codebook_csv(const std::string& path, const HierarchicalCodebook& hier);

/// FNV-1a over the binary serialization, as a hex string.
std::string codebook_hash(const LowerCodebook& cb);
std::string codebook_hash(const HierarchicalCodebook& hier);

}  // namespace nfcb
