/** Grid state and interaction logic, DOM-free so it can be tested directly.
 *
 * The controller never decides verdicts itself: every mask change issues a
 * classify request and the latest response for the *current* mask wins;
 * responses for masks the user has already left are discarded.  A failed
 * request raises a stale banner but leaves the grid editable.
 */

import { Classification, ClassifyClient } from "./api.js";
import { maskPoints, Point, togglePoint } from "./bits.js";
import { FIXTURE_MASKS } from "./fixtures.js";

export type OverlayMode =
  | "none"
  | "covering"
  | "violating_point"
  | "quadruple_free"
  | "complement";

export const UNDO_DEPTH = 64;

export class GridController {
  mask = 0;
  classification: Classification | null = null;
  overlay: OverlayMode = "none";
  coveringIndex = 0;
  stale = false;
  lastError: string | null = null;
  pending = 0;

  private undoStack: number[] = [];
  private settleResolvers: (() => void)[] = [];

  constructor(
    private readonly client: ClassifyClient,
    private readonly onChange: () => void = () => {},
  ) {}

  /** Flip one cell and reclassify; the grid always mirrors `mask`. */
  toggleCell(alpha: number, beta: number): Promise<void> {
    return this.applyMask(togglePoint(this.mask, alpha, beta));
  }

  loadFixture(name: string): Promise<void> {
    const mask = FIXTURE_MASKS[name];
    if (mask === undefined) {
      this.lastError = `unknown fixture "${name}"`;
      this.onChange();
      return Promise.resolve();
    }
    return this.applyMask(mask);
  }

  undo(): Promise<void> {
    const previous = this.undoStack.pop();
    if (previous === undefined) return Promise.resolve();
    return this.requestClassification(previous);
  }

  undoDepth(): number {
    return this.undoStack.length;
  }

  cycleCoveringQuadruple(): void {
    this.coveringIndex += 1;
    this.onChange();
  }

  setOverlay(mode: OverlayMode): void {
    this.overlay = mode;
    this.onChange();
  }

  /** Points highlighted by the active overlay; always a subset of the mask
   * in covering mode and of its complement in complement mode. */
  overlayPoints(): Point[] {
    const cert = this.classification?.certificate;
    switch (this.overlay) {
      case "covering": {
        const quads = cert?.type === "covering" ? cert.quadruples ?? [] : [];
        if (quads.length === 0) return [];
        const quad = quads[this.coveringIndex % quads.length];
        return quad.points.map(([a, b]) => [a, b] as Point);
      }
      case "violating_point":
        return cert?.type === "violating_point" && cert.point ? [cert.point] : [];
      case "quadruple_free":
        return cert?.type === "quadruple_free_point" && cert.point ? [cert.point] : [];
      case "complement":
        return maskPoints(this.mask ^ 0xffff);
      default:
        return [];
    }
  }

  /** Resolves once no classify request is in flight. */
  settled(): Promise<void> {
    if (this.pending === 0) return Promise.resolve();
    return new Promise((resolve) => this.settleResolvers.push(resolve));
  }

  private applyMask(mask: number): Promise<void> {
    this.undoStack.push(this.mask);
    if (this.undoStack.length > UNDO_DEPTH) this.undoStack.shift();
    return this.requestClassification(mask);
  }

  private requestClassification(mask: number): Promise<void> {
    this.mask = mask;
    this.coveringIndex = 0;
    this.lastError = null;
    this.onChange();
    if (mask === 0) {
      this.classification = null;
      this.stale = false;
      this.onChange();
      return Promise.resolve();
    }
    this.pending += 1;
    return this.client
      .classify(mask)
      .then((result) => {
        if (this.mask === mask) {
          // last-write-wins: only the current mask's result renders
          this.classification = result;
          this.stale = false;
        }
      })
      .catch((error: unknown) => {
        if (this.mask === mask) {
          this.stale = true;
          this.lastError = error instanceof Error ? error.message : String(error);
        }
      })
      .finally(() => {
        this.pending -= 1;
        this.onChange();
        if (this.pending === 0) {
          const resolvers = this.settleResolvers;
          this.settleResolvers = [];
          resolvers.forEach((resolve) => resolve());
        }
      });
  }
}
