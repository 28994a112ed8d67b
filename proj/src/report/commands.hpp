#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "beauville/beauville.hpp"
#include "report/report.hpp"

namespace bv::report {

Report cmd_search(beauville::Target const &t, beauville::SearchStrategy const &s);
/// Refused certificates get Verdict::Fail.
Report cmd_verify(std::string const &certificate_text, std::size_t cap = grp::kDefaultGroupCap);
/// One row per prime power q in [q_lo, q_hi].
Report cmd_tori(std::string const &type, unsigned r, std::uint64_t q_lo, std::uint64_t q_hi);
Report cmd_singer(unsigned r, std::uint64_t q, bool check_intersection, std::size_t cap = grp::kDefaultGroupCap);
/// Soft bound over every abstractly regular element, plus the SL2 regular
/// bound or the Singer bound when the group is SL(n,q).
Report cmd_charbound(beauville::Target const &t, std::uint64_t seed = chars::kDefaultTableSeed);
Report cmd_ree(unsigned f_lo, unsigned f_hi);
/// Class indices are positions in the group's class list (see charbound).
Report cmd_count(beauville::Target const &t, std::vector<std::size_t> const &classes,
                 std::size_t lattice_cap = grp::kDefaultLatticeCap, std::uint64_t seed = chars::kDefaultTableSeed);
Report cmd_resultant(std::uint64_t a, std::uint64_t b);
Report cmd_zeta(beauville::Target const &t, double s, std::size_t lattice_cap = grp::kDefaultLatticeCap,
                std::uint64_t seed = chars::kDefaultTableSeed);

} // namespace bv::report
