/** Typed client for the classification API; no verdict logic lives here. */

export type Verdict =
  | "NPT_ENTANGLED"
  | "PPT_ENTANGLED"
  | "SEPARABLE"
  | "UNDECIDED";

export interface CoveringQuadruple {
  index: number;
  points: [number, number][];
  weight: string;
  count?: number;
}

export interface Certificate {
  type: "violating_point" | "quadruple_free_point" | "covering" | "none";
  point?: [number, number];
  delta_estimate?: number;
  quadruples?: CoveringQuadruple[];
  multiplicity?: number | null;
  cardinality?: number | null;
}

export interface Classification {
  schema: string;
  mask: string;
  grid: string[];
  n_points: number;
  verdict: Verdict;
  certificate: Certificate;
  flags: Record<string, unknown>;
}

export interface ClassifyClient {
  classify(mask: number): Promise<Classification>;
}

interface Envelope<T> {
  version: string;
  result: T;
  error?: string;
}

export class HttpClassifyClient implements ClassifyClient {
  constructor(private readonly baseUrl: string) {}

  async classify(mask: number): Promise<Classification> {
    const response = await fetch(`${this.baseUrl}/classify`, {
      method: "POST",
      headers: { "content-type": "application/json" },
      body: JSON.stringify({ pattern: mask }),
    });
    const body = (await response.json()) as Envelope<Classification>;
    if (!response.ok) {
      throw new Error(body.error ?? `classify failed with ${response.status}`);
    }
    return body.result;
  }
}

export function apiBaseFromLocation(defaultBase = "http://127.0.0.1:8787"): string {
  if (typeof window === "undefined") return defaultBase;
  const override = new URLSearchParams(window.location.search).get("api");
  return override ?? defaultBase;
}
