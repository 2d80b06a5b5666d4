/** Named preset masks; the server owns the verdicts, these are inputs only. */

export const FIXTURE_MASKS: Record<string, number> = {
  eq13a: 0x6965, // rank-8 crossing pattern, NPT
  eq13b: 0x4948, // five-point crossing pattern, NPT
  eq14a: 0xc9a0, // six points, PPT entangled via a sparse line
  eq14b: 0xedc0, // eight points, PPT entangled via a sparse line
  eq15: 0x96bb, // ten points, only the recentered line criterion fires
  eq23: 0xeee1, // ten points, separable with a five-quadruple covering
  rank11: 0x9b77, // eleven points, every point covered by three quadruples
};

export const FIXTURE_NAMES = Object.keys(FIXTURE_MASKS);
