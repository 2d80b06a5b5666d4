/** 16-bit mask bookkeeping for the 4x4 lattice: bit 4*beta + alpha. */

export type Point = [number, number]; // [alpha, beta] = [column, row]

export function pointBit(alpha: number, beta: number): number {
  if (alpha < 0 || alpha > 3 || beta < 0 || beta > 3) {
    throw new RangeError(`lattice point out of range: (${alpha},${beta})`);
  }
  return 4 * beta + alpha;
}

export function hasPoint(mask: number, alpha: number, beta: number): boolean {
  return ((mask >> pointBit(alpha, beta)) & 1) === 1;
}

export function togglePoint(mask: number, alpha: number, beta: number): number {
  return mask ^ (1 << pointBit(alpha, beta));
}

export function maskPoints(mask: number): Point[] {
  const points: Point[] = [];
  for (let bit = 0; bit < 16; bit++) {
    if ((mask >> bit) & 1) points.push([bit & 3, bit >> 2]);
  }
  return points;
}

export function popcount(mask: number): number {
  let count = 0;
  for (let bit = 0; bit < 16; bit++) count += (mask >> bit) & 1;
  return count;
}

export function maskHex(mask: number): string {
  return "0x" + mask.toString(16).toUpperCase().padStart(4, "0");
}

/** Rows of 'x'/'.' with the beta = 3 row first, matching the server grids. */
export function maskGrid(mask: number): string[] {
  const rows: string[] = [];
  for (let beta = 3; beta >= 0; beta--) {
    let row = "";
    for (let alpha = 0; alpha < 4; alpha++) {
      row += hasPoint(mask, alpha, beta) ? "x" : ".";
    }
    rows.push(row);
  }
  return rows;
}
