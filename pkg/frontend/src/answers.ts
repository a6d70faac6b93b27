/** Build and pre-check answer values so nothing leaves the client that the
 * server would reject. The server is still the authority; this mirror exists
 * to keep offline-queued submissions from dying on reconnect. */

import type { AnswerKind, AnswerValue, EmaResponsePayload, Question, WindowId } from "./types.js";

export function magnitude(value: number): AnswerValue {
  return { kind: "magnitude", value };
}

export function clockFromHHMM(text: string): AnswerValue {
  const [hh = "0", mm = "0"] = text.split(":");
  return { kind: "clock", minutes: Number(hh) * 60 + Number(mm) };
}

export function ordinal(level: number): AnswerValue {
  return { kind: "ordinal", level };
}

export function categories(values: string[]): AnswerValue {
  return { kind: "categories", values };
}

export function flag(value: boolean): AnswerValue {
  return { kind: "flag", value };
}

export function text(value: string): AnswerValue {
  return { kind: "text", value };
}

/** Returns a problem description, or null when the value fits the kind. */
export function checkAnswer(kind: AnswerKind, value: AnswerValue): string | null {
  switch (kind.kind) {
    case "quant-sequential":
      if (value.kind !== "magnitude") return "expected a magnitude";
      if (!Number.isInteger(value.value)) return "magnitude must be an integer";
      if (value.value < kind.lo || value.value > kind.hi)
        return `magnitude outside ${kind.lo}..${kind.hi}`;
      return null;
    case "quant-cyclic":
      if (value.kind !== "clock") return "expected a clock time";
      if (!Number.isInteger(value.minutes) || value.minutes < 0 || value.minutes > 1439)
        return "clock minutes outside 0..1439";
      return null;
    case "ordinal-sequential":
    case "ordinal-diverging":
      if (value.kind !== "ordinal") return "expected an ordinal level";
      if (value.level < 0 || value.level >= kind.labels.length) return "level out of range";
      return null;
    case "categorical": {
      if (value.kind !== "categories") return "expected categories";
      const seen = new Set<string>();
      for (const v of value.values) {
        if (!kind.labels.includes(v)) return `unknown category ${v}`;
        if (seen.has(v)) return `duplicate category ${v}`;
        seen.add(v);
      }
      if (!kind.multi && value.values.length > 1) return "single-answer question";
      return null;
    }
    case "binary":
      return value.kind === "flag" ? null : "expected yes/no";
    case "free-text":
      return value.kind === "text" ? null : "expected text";
  }
}

/** RFC 3339 timestamp with the device's UTC offset made explicit. */
export function localTimestamp(now: Date = new Date()): string {
  const pad = (n: number, width = 2) => String(Math.abs(n)).padStart(width, "0");
  const offsetMinutes = -now.getTimezoneOffset();
  const sign = offsetMinutes >= 0 ? "+" : "-";
  const offset = `${sign}${pad(Math.trunc(offsetMinutes / 60))}:${pad(offsetMinutes % 60)}`;
  return (
    `${now.getFullYear()}-${pad(now.getMonth() + 1)}-${pad(now.getDate())}` +
    `T${pad(now.getHours())}:${pad(now.getMinutes())}:${pad(now.getSeconds())}${offset}`
  );
}

export interface BuildProblem {
  qid: string;
  message: string;
}

/** Assemble a response payload from collected answers; skipped questions are
 * simply absent. Throws nothing: problems come back for the UI to show. */
export function buildResponse(
  participant: string,
  date: string,
  window: WindowId,
  questions: Question[],
  answers: Map<string, AnswerValue>,
  submittedAt: string,
): { payload: EmaResponsePayload; problems: BuildProblem[] } {
  const byQid = new Map(questions.map((q) => [q.qid, q]));
  const problems: BuildProblem[] = [];
  const accepted: Record<string, AnswerValue> = {};
  for (const [qid, value] of answers) {
    const question = byQid.get(qid);
    if (question === undefined) {
      problems.push({ qid, message: "not part of this survey window" });
      continue;
    }
    const problem = checkAnswer(question.answer, value);
    if (problem !== null) {
      problems.push({ qid, message: problem });
      continue;
    }
    accepted[qid] = value;
  }
  return {
    payload: {
      participant,
      date,
      window,
      submitted_at: submittedAt,
      answers: accepted,
      revision: 1,
    },
    problems,
  };
}
