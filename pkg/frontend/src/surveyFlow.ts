/** One-question-per-screen survey flow.
 *
 * The flow only ever renders questions from the server's current-window
 * payload, never a cached one: the caller fetches `/api/survey/current` and
 * hands the fresh payload in. Every question is skippable; a submission with
 * a single answer is still a submission worth keeping.
 */

import { buildResponse, type BuildProblem } from "./answers.js";
import type {
  AnswerValue,
  EmaResponsePayload,
  Question,
  SurveyWindowPayload,
} from "./types.js";

export type { BuildProblem } from "./answers.js";

export interface FlowStep {
  index: number;
  total: number;
  question: Question;
  answered: boolean;
}

export class SurveyFlow {
  private index = 0;
  private answers = new Map<string, AnswerValue>();

  constructor(
    private participant: string,
    private window: SurveyWindowPayload,
  ) {}

  get done(): boolean {
    return this.index >= this.window.questions.length;
  }

  current(): FlowStep | null {
    if (this.done) return null;
    const question = this.window.questions[this.index]!;
    return {
      index: this.index,
      total: this.window.questions.length,
      question,
      answered: this.answers.has(question.qid),
    };
  }

  record(value: AnswerValue): void {
    const step = this.current();
    if (step === null) return;
    this.answers.set(step.question.qid, value);
    this.index += 1;
  }

  skip(): void {
    if (!this.done) this.index += 1;
  }

  back(): void {
    if (this.index > 0) this.index -= 1;
  }

  answeredCount(): number {
    return this.answers.size;
  }

  /** Assemble the submission payload with the moment's local timestamp. */
  finish(submittedAt: string): { payload: EmaResponsePayload; problems: BuildProblem[] } {
    return buildResponse(
      this.participant,
      this.window.date,
      this.window.window,
      this.window.questions,
      this.answers,
      submittedAt,
    );
  }
}
