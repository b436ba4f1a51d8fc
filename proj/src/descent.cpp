#include "twist/descent.hpp"

#include <sstream>

namespace twist {

DescentReport descend_occurrence(const CyclicShiftMorphism& psi,
                                 const Word& host, const Occurrence& occ,
                                 const Permutation& delta) {
  std::size_t total = static_cast<std::size_t>(occ.k) * occ.m;
  if (occ.m < 1 || occ.k < 2 || occ.start > host.size() ||
      total > host.size() - occ.start)
    throw Error("occurrence does not fit in the host word");
  Word u = host.factor(occ.start, total);
  auto verified = is_strong_repetition(u, occ.k, delta);
  if (!verified.has_value() || *verified != occ.m)
    throw Error("occurrence is not a strong repetition in the host word");

  DescentReport report;
  report.occurrence = occ;
  report.start_parity = static_cast<int>(occ.start % 2);
  report.m_even = occ.m % 2 == 0;
  report.aligned = report.start_parity == 0 && report.m_even;
  if (!report.aligned) {
    report.note = report.m_even
                      ? "start is odd; blocks are not image-aligned"
                      : "block length is odd; blocks cannot be images";
    return report;
  }

  // image-aligned: pull each block back through the substitution
  Word preimage(psi.alphabet());
  bool all_images = true;
  for (int i = 0; i < occ.k; ++i) {
    Word block = u.factor(static_cast<std::size_t>(i) * occ.m, occ.m);
    auto back = psi.desubstitute(block, 0);
    if (!back.has_value()) {
      all_images = false;
      std::ostringstream msg;
      msg << "block " << i << " is not an image under the substitution";
      report.note = msg.str();
      break;
    }
    report.preimage_blocks.push_back(*back);
    preimage = preimage + *back;
  }
  report.blocks_desubstitute = all_images;
  if (!all_images) {
    report.preimage_blocks.clear();
    return report;
  }

  auto half = is_strong_repetition(preimage, occ.k, delta);
  report.preimage_is_repetition = half.has_value() && *half == occ.m / 2;
  if (report.preimage_is_repetition) {
    report.preimage = Occurrence{0, occ.m / 2, occ.k};
    report.note = "preimage repeats with half the block length";
  } else {
    report.note = "preimage does not repeat; descent breaks here";
  }
  return report;
}

}  // namespace twist
