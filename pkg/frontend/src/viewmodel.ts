// The view model is a pure projection of API payloads; the page holds no
// proof state of its own.

import { rationalToNumber } from "./render.js";
import type { AttemptPayload, StatusPayload, TightPayload } from "./types.js";

export interface ViewModel {
  session: string;
  rounds: number;
  librarySize: number;
  pendingObligations: string[];
  assertedObligations: string[];
  lastAlpha: number | null;
  proven: boolean;
  alphaSeries: { seq: number; value: number }[];
  tightCount: number;
  tightWords: string[];
}

export function buildViewModel(status: StatusPayload, tight: TightPayload): ViewModel {
  const series = status.alpha_history.map((p) => ({
    seq: p.seq,
    value: rationalToNumber(p.alpha),
  }));
  const last = status.last_alpha === null ? null : rationalToNumber(status.last_alpha);
  return {
    session: status.session,
    rounds: status.alpha_history.length,
    librarySize: status.library_size,
    pendingObligations: status.pending,
    assertedObligations: status.asserted,
    lastAlpha: last,
    proven: last !== null && last >= 4,
    alphaSeries: series,
    tightCount: tight.count,
    tightWords: tight.tight,
  };
}

export interface AttemptView {
  ok: boolean;
  headline: string;
  detail: string[];
  diagnostics: { vertex: string; ell: number; inclusion?: boolean }[];
}

export function buildAttemptView(result: AttemptPayload): AttemptView {
  if (result.result) {
    const ells = Object.entries(result.ell ?? {})
      .map(([v, e]) => `${v}:${e}`)
      .join(" ");
    return {
      ok: true,
      headline: `reducible via ${result.mode}`,
      detail: [`derived list sizes ${ells}`],
      diagnostics: [],
    };
  }
  const rows = Object.entries(result.core_ell ?? {}).map(([vertex, ell]) => ({
    vertex,
    ell,
    inclusion: result.inclusion_row ? result.inclusion_row[vertex] : undefined,
  }));
  return {
    ok: false,
    headline: result.reason ?? "reduction failed",
    detail: result.core ? [`stuck core: ${result.core.join(" ")}`] : [],
    diagnostics: rows,
  };
}
