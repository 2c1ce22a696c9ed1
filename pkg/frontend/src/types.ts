/** Wire types for the elicitation service. */

export type SessionStatus = 'needs_judgments' | 'tree_complete' | 'overdetermined';

export interface SessionCreated {
  id: string;
  labels: string[];
  n: number;
  status: SessionStatus;
  remaining: number;
}

export interface JudgmentRecord {
  i: number;
  j: number;
  value: number;
}

export interface WorstTriad {
  i: number;
  k: number;
  j: number;
  x: number;
  y: number;
  z: number;
  indicator: number;
}

export interface MatrixView {
  complete: boolean;
  entries: (number | null)[][];
}

export interface RankEntry {
  label: string;
  weight: number;
}

export interface SessionReport {
  id: string;
  labels: string[];
  n: number;
  status: SessionStatus;
  remaining: number;
  superfluous: number;
  judgments: JudgmentRecord[];
  matrix: MatrixView;
  kii: number | null;
  worst_triad: WorstTriad | null;
  weights: number[] | null;
  ranking: RankEntry[] | null;
}

export interface ServiceError {
  code: string;
  message: string;
}
