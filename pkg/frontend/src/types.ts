/** Wire types mirroring the server's JSON schemas (docs/schemas/). */

export type WindowId = "morning" | "afternoon" | "evening";

export type AnswerKind =
  | { kind: "quant-sequential"; lo: number; hi: number }
  | { kind: "quant-cyclic" }
  | { kind: "ordinal-sequential"; labels: string[] }
  | { kind: "ordinal-diverging"; labels: string[] }
  | { kind: "categorical"; labels: string[]; multi?: boolean }
  | { kind: "binary" }
  | { kind: "free-text" };

export type AnswerValue =
  | { kind: "magnitude"; value: number }
  | { kind: "clock"; minutes: number }
  | { kind: "ordinal"; level: number }
  | { kind: "categories"; values: string[] }
  | { kind: "flag"; value: boolean }
  | { kind: "text"; value: string };

export interface Question {
  qid: string;
  facet: string;
  prompt: string;
  answer: AnswerKind;
  asked_in: WindowId[];
  required: boolean;
}

export interface SurveyWindowPayload {
  status: "open";
  window: WindowId;
  date: string; // YYYY-MM-DD
  closes_at: string;
  definition_version: string;
  questions: Question[];
}

export interface NoWindowPayload {
  status: "no-window-open";
  next_open: string | null;
}

export type SurveyCurrent = SurveyWindowPayload | NoWindowPayload;

export interface EmaResponsePayload {
  participant: string;
  date: string;
  window: WindowId;
  submitted_at: string; // RFC 3339 with explicit offset
  answers: Record<string, AnswerValue>;
  revision: number;
}

export interface SubmitResult {
  revision: number;
}

export interface ApiError {
  errors?: { qid?: string; code?: string; message: string }[];
  detail?: string;
}

/** Companion layout model for the dashboard SVG. */
export interface LayoutMark {
  role: string;
  shape: string;
  x: number;
  y: number;
  day?: number;
  window?: number;
  value?: number;
  text?: string;
}

export interface LayoutFrame {
  id: string;
  title: string;
  x: number;
  y: number;
  w: number;
  h: number;
  marks: LayoutMark[];
}

export interface LayoutBlock {
  id: string;
  facet: string;
  title: string;
  x: number;
  y: number;
  w: number;
  h: number;
  frames: LayoutFrame[];
}

export interface DashboardLayout {
  width: number;
  height: number;
  blocks: LayoutBlock[];
}

export interface ClientSession {
  studyCode: string;
  timezone: string;
  definitionVersion: string | null;
  onboardingDone: boolean;
}
