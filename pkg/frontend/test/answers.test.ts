import { describe, expect, it } from "vitest";

import {
  buildResponse,
  categories,
  checkAnswer,
  clockFromHHMM,
  flag,
  localTimestamp,
  magnitude,
  ordinal,
} from "../src/answers.js";
import type { Question } from "../src/types.js";

const SCALE: Question = {
  qid: "emo-happy",
  facet: "emotions",
  prompt: "How happy?",
  answer: { kind: "quant-sequential", lo: 0, hi: 10 },
  asked_in: ["morning", "afternoon", "evening"],
  required: true,
};

const TARGET: Question = {
  qid: "worry-target",
  facet: "worries",
  prompt: "Most worried about?",
  answer: { kind: "categorical", labels: ["family", "friends", "school"], multi: false },
  asked_in: ["morning"],
  required: true,
};

describe("checkAnswer", () => {
  it("accepts in-range magnitudes and rejects out-of-range ones", () => {
    expect(checkAnswer(SCALE.answer, magnitude(0))).toBeNull();
    expect(checkAnswer(SCALE.answer, magnitude(10))).toBeNull();
    expect(checkAnswer(SCALE.answer, magnitude(11))).toMatch(/outside/);
    expect(checkAnswer(SCALE.answer, magnitude(2.5))).toMatch(/integer/);
  });

  it("rejects wrong variants", () => {
    expect(checkAnswer(SCALE.answer, flag(true))).toMatch(/magnitude/);
    expect(checkAnswer({ kind: "binary" }, magnitude(1))).toMatch(/yes\/no/);
  });

  it("enforces clock bounds", () => {
    expect(checkAnswer({ kind: "quant-cyclic" }, clockFromHHMM("23:59"))).toBeNull();
    expect(checkAnswer({ kind: "quant-cyclic" }, { kind: "clock", minutes: 1440 })).toMatch(/0\.\.1439/);
  });

  it("enforces category membership and single-answer rules", () => {
    expect(checkAnswer(TARGET.answer, categories(["family"]))).toBeNull();
    expect(checkAnswer(TARGET.answer, categories(["gremlins"]))).toMatch(/unknown/);
    expect(checkAnswer(TARGET.answer, categories(["family", "school"]))).toMatch(/single/);
    expect(checkAnswer(TARGET.answer, categories([]))).toBeNull(); // empty set is a supplied answer
  });

  it("enforces ordinal ranges", () => {
    const kind = { kind: "ordinal-sequential" as const, labels: ["poor", "okay", "good", "great"] };
    expect(checkAnswer(kind, ordinal(3))).toBeNull();
    expect(checkAnswer(kind, ordinal(4))).toMatch(/range/);
  });
});

describe("localTimestamp", () => {
  it("always carries an explicit UTC offset", () => {
    expect(localTimestamp(new Date(2024, 2, 4, 8, 5, 9))).toMatch(
      /^2024-03-04T08:05:09[+-]\d{2}:\d{2}$/,
    );
  });
});

describe("buildResponse", () => {
  it("keeps valid answers and reports the rest without dropping the submission", () => {
    const answers = new Map([
      ["emo-happy", magnitude(7)],
      ["worry-target", categories(["family", "school"])], // single-answer violation
      ["stray-qid", magnitude(1)],
    ]);
    const { payload, problems } = buildResponse(
      "P000", "2024-03-04", "morning", [SCALE, TARGET], answers, "2024-03-04T08:00:00+00:00",
    );
    expect(Object.keys(payload.answers)).toEqual(["emo-happy"]);
    expect(problems.map((p) => p.qid).sort()).toEqual(["stray-qid", "worry-target"]);
    expect(payload.window).toBe("morning");
    expect(payload.submitted_at).toBe("2024-03-04T08:00:00+00:00");
  });

  it("builds a valid partial payload from a single answer", () => {
    const { payload, problems } = buildResponse(
      "P000", "2024-03-04", "morning", [SCALE, TARGET],
      new Map([["emo-happy", magnitude(3)]]), "2024-03-04T08:00:00+00:00",
    );
    expect(problems).toEqual([]);
    expect(payload.answers).toEqual({ "emo-happy": { kind: "magnitude", value: 3 } });
  });
});
