// Payload shapes of the prover HTTP API.

export interface AlphaPoint {
  seq: number;
  alpha: string; // exact rational as "p/q" or an integer string
  tight_count: number;
  library_size: number;
}

export interface StatusPayload {
  session: string;
  words: Record<string, { count: number; sha256: string }>;
  library_size: number;
  pending: string[];
  asserted: string[];
  alpha_history: AlphaPoint[];
  last_alpha: string | null;
}

export interface TightPayload {
  count: number;
  tight: string[];
}

export interface ConfigPayload {
  word: string;
  kind: string;
  slots: string[];
  constraint: { terms: { key: string; coefficient: number }[]; rhs: string };
  tight: boolean;
}

export interface AttemptRequest {
  fragment: string;
  pivot?: string;
  pairs?: string[][];
}

export interface AttemptPayload {
  result: boolean;
  mode?: string;
  ell?: Record<string, number>;
  graph?: string;
  reason?: string;
  core?: string[];
  core_ell?: Record<string, number>;
  inclusion_row?: Record<string, boolean>;
  fragment?: string;
  pivot?: string;
  pairs?: string[][];
  k?: number;
}

export interface CommitRequest {
  id: string;
  patterns: string[];
  description?: string;
  fragment?: string;
  pivot?: string;
  pairs?: string[][];
  absorbs?: string[];
  evidence?: AttemptPayload | null;
  assert_reason?: string;
}

export interface HistoryPayload {
  log: Record<string, unknown>[];
}

export interface FragmentsPayload {
  fixtures: Record<string, string>;
  library: Record<string, string>;
}
