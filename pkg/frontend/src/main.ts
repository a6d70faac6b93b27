/** DOM glue: a four-screen app (enter code, today, survey, dashboard).
 *
 * All the behaviour worth testing lives in the imported modules; this file
 * only wires them to elements. Supportive microcopy throughout — gaps are
 * never shamed, streaks are never counted.
 */

import { Api, ApiHttpError } from "./api.js";
import { clockFromHHMM, flag, localTimestamp, magnitude, ordinal, categories, text } from "./answers.js";
import {
  ALLOWED_DASHBOARD_ELEMENTS,
  displayWidth,
  lockedWeekScreen,
} from "./dashboard.js";
import { OfflineQueue } from "./offlineQueue.js";
import { Onboarding, SLIDES } from "./onboarding.js";
import { loadSession, startSession } from "./session.js";
import { browserKV } from "./storage.js";
import { SurveyFlow } from "./surveyFlow.js";
import type { AnswerValue, Question, SurveyWindowPayload } from "./types.js";

const kv = browserKV();
const root = document.getElementById("app")!;

let api: Api | null = null;
let queue: OfflineQueue | null = null;

function el(tag: string, className: string, textContent = ""): HTMLElement {
  const node = document.createElement(tag);
  node.className = className;
  if (textContent) node.textContent = textContent;
  return node;
}

function screen(...children: (HTMLElement | string)[]): void {
  root.replaceChildren();
  for (const child of children) {
    root.append(typeof child === "string" ? el("p", "copy", child) : child);
  }
}

// --- login ------------------------------------------------------------------

function showLogin(): void {
  const box = el("div", "card");
  box.append(el("h1", "title", "weeklens"));
  box.append(el("p", "copy", "Enter the study code from your welcome letter."));
  const input = document.createElement("input");
  input.className = "code-input";
  input.placeholder = "study code";
  input.autocapitalize = "characters";
  const go = el("button", "primary", "Start") as HTMLButtonElement;
  go.onclick = () => {
    if (!input.value.trim()) return;
    const session = startSession(kv, input.value);
    boot(session.studyCode);
  };
  box.append(input, go);
  screen(box);
}

// --- today ------------------------------------------------------------------

async function showToday(): Promise<void> {
  if (api === null) return showLogin();
  const onboarding = new Onboarding(kv);
  if (onboarding.shouldShow()) return showOnboarding(0);

  const header = appHeader();
  try {
    const current = await api.surveyCurrent();
    if (current.status === "open") {
      const card = el("div", "card");
      card.append(el("h2", "title", `Your ${current.window} check-in is open`));
      card.append(el("p", "copy", `Closes at ${current.closes_at.slice(11, 16)}.`));
      const start = el("button", "primary", "Answer now") as HTMLButtonElement;
      start.onclick = () => showSurvey(current);
      card.append(start);
      screen(header, card);
    } else {
      const card = el("div", "card");
      card.append(el("h2", "title", "Nothing due right now"));
      card.append(
        el(
          "p",
          "copy",
          current.next_open
            ? `Your next check-in opens ${current.next_open.replace("T", " at ").slice(0, 22)}.`
            : "This study week has no check-ins scheduled.",
        ),
      );
      screen(header, card);
    }
  } catch (error) {
    if (error instanceof ApiHttpError && error.status === 409) {
      screen(header, el("p", "copy", "Rest week — no check-ins, no charts. See you next week!"));
    } else {
      screen(header, el("p", "copy", "Couldn't reach the study server. Your answers will queue up."));
    }
  }
}

function appHeader(): HTMLElement {
  const bar = el("header", "appbar");
  bar.append(el("span", "brand", "weeklens"));
  const dash = el("a", "navlink", "Dashboard");
  dash.onclick = () => showDashboard();
  const help = el("a", "navlink", "Help");
  help.onclick = () => showOnboarding(0); // the walkthrough is always re-openable
  bar.append(dash, help);
  return bar;
}

// --- survey flow -------------------------------------------------------------

function showSurvey(window: SurveyWindowPayload): void {
  const session = loadSession(kv);
  if (session === null || api === null) return showLogin();
  const flow = new SurveyFlow(session.studyCode, window);
  renderStep(flow);
}

function renderStep(flow: SurveyFlow): void {
  const step = flow.current();
  if (step === null) {
    void submitFlow(flow);
    return;
  }

  const card = el("div", "card");
  card.append(el("p", "progress", `${step.index + 1} of ${step.total}`));
  card.append(el("h2", "prompt", step.question.prompt));
  card.append(widgetFor(step.question, (value) => {
    flow.record(value);
    renderStep(flow);
  }));

  const controls = el("div", "controls");
  const skip = el("button", "ghost", "Skip") as HTMLButtonElement;
  skip.onclick = () => {
    flow.skip();
    renderStep(flow);
  };
  const back = el("button", "ghost", "Back") as HTMLButtonElement;
  back.onclick = () => {
    flow.back();
    renderStep(flow);
  };
  controls.append(back, skip);
  card.append(controls);
  screen(appHeader(), card);
}

function widgetFor(question: Question, onAnswer: (v: AnswerValue) => void): HTMLElement {
  const kind = question.answer;
  const box = el("div", "widget");
  switch (kind.kind) {
    case "quant-sequential": {
      const slider = document.createElement("input");
      slider.type = "range";
      slider.min = String(kind.lo);
      slider.max = String(kind.hi);
      slider.value = String(Math.round((kind.lo + kind.hi) / 2));
      const readout = el("div", "readout", slider.value);
      slider.oninput = () => (readout.textContent = slider.value);
      const ok = el("button", "primary", "That's right") as HTMLButtonElement;
      ok.onclick = () => onAnswer(magnitude(Number(slider.value)));
      box.append(slider, readout, ok);
      break;
    }
    case "quant-cyclic": {
      const picker = document.createElement("input");
      picker.type = "time";
      picker.value = "22:00";
      const ok = el("button", "primary", "Set time") as HTMLButtonElement;
      ok.onclick = () => onAnswer(clockFromHHMM(picker.value));
      box.append(picker, ok);
      break;
    }
    case "ordinal-sequential":
    case "ordinal-diverging":
      kind.labels.forEach((label, level) => {
        const chip = el("button", "chip", label) as HTMLButtonElement;
        chip.onclick = () => onAnswer(ordinal(level));
        box.append(chip);
      });
      break;
    case "categorical": {
      const selected = new Set<string>();
      for (const label of kind.labels) {
        const chip = el("button", "chip", label) as HTMLButtonElement;
        chip.onclick = () => {
          if (kind.multi) {
            chip.classList.toggle("on");
            selected.has(label) ? selected.delete(label) : selected.add(label);
          } else {
            onAnswer(categories([label]));
          }
        };
        box.append(chip);
      }
      if (kind.multi) {
        const ok = el("button", "primary", "Done") as HTMLButtonElement;
        ok.onclick = () => onAnswer(categories([...selected]));
        box.append(ok);
      }
      break;
    }
    case "binary": {
      for (const [label, value] of [["Yes", true], ["No", false]] as const) {
        const chip = el("button", "chip", label) as HTMLButtonElement;
        chip.onclick = () => onAnswer(flag(value));
        box.append(chip);
      }
      break;
    }
    case "free-text": {
      const area = document.createElement("textarea");
      area.rows = 3;
      const ok = el("button", "primary", "Done") as HTMLButtonElement;
      ok.onclick = () => onAnswer(text(area.value));
      box.append(area, ok);
      break;
    }
  }
  return box;
}

async function submitFlow(flow: SurveyFlow): Promise<void> {
  if (api === null || queue === null) return showLogin();
  const { payload, problems } = flow.finish(localTimestamp());
  const card = el("div", "card");
  if (problems.length > 0) {
    card.append(el("p", "copy", "Something looked off; those answers were left out."));
  }
  try {
    await api.submitResponse(payload);
    card.append(el("h2", "title", "Saved — thanks!"));
    card.append(el("p", "copy", `${flow.answeredCount()} answers recorded. Every bit helps.`));
  } catch (error) {
    if (error instanceof ApiHttpError) {
      card.append(el("h2", "title", "The server didn't accept that one"));
    } else {
      // offline: keep it with its original timestamp and send later
      queue.enqueue(payload);
      card.append(el("h2", "title", "Saved on your phone"));
      card.append(el("p", "copy", "No connection right now — it will send itself later."));
    }
  }
  const done = el("button", "primary", "Back to today") as HTMLButtonElement;
  done.onclick = () => showToday();
  card.append(done);
  screen(appHeader(), card);
}

// --- dashboard ----------------------------------------------------------------

async function showDashboard(weekStart?: string): Promise<void> {
  if (api === null) return showLogin();
  const header = appHeader();
  const holder = el("div", "dashboard-scroll");
  try {
    const week = weekStart ?? new Date().toISOString().slice(0, 10);
    const svg = await api.dashboardSvg(week);
    const embed = el("div", "svg-embed");
    embed.dataset.element = "svg-embed";
    embed.innerHTML = svg;
    const svgEl = embed.querySelector("svg");
    if (svgEl !== null) {
      svgEl.setAttribute("width", String(displayWidth(window.innerWidth, window.innerHeight)));
      svgEl.removeAttribute("height"); // preserve aspect via viewBox
    }
    holder.append(embed);
    screen(header, holder);
  } catch (error) {
    if (error instanceof ApiHttpError && error.status === 403) {
      const locked = lockedWeekScreen();
      const card = el("div", "card");
      card.append(el("h2", "title", locked.title));
      card.append(el("p", "copy", locked.body));
      screen(header, card);
    } else {
      screen(header, el("p", "copy", "Couldn't load your charts just now."));
    }
  }
}

// --- onboarding ----------------------------------------------------------------

function showOnboarding(index: number): void {
  const onboarding = new Onboarding(kv);
  const slide = SLIDES[index];
  if (slide === undefined) {
    onboarding.markDone();
    return void showToday();
  }
  const card = el("div", "card");
  card.append(el("p", "progress", `${index + 1} of ${SLIDES.length}`));
  card.append(el("h2", "title", slide.title));
  card.append(el("p", "copy", slide.body));
  if (slide.sampleDashboard) {
    const embed = el("div", "svg-embed sample");
    fetch("./sample-dashboard.svg")
      .then((r) => r.text())
      .then((svg) => (embed.innerHTML = svg))
      .catch(() => (embed.textContent = "(sample unavailable)"));
    card.append(embed);
  }
  const controls = el("div", "controls");
  const next = el("button", "primary", index + 1 < SLIDES.length ? "Next" : "Let's go") as HTMLButtonElement;
  next.onclick = () => showOnboarding(index + 1);
  const dismiss = el("button", "ghost", "Skip the tour") as HTMLButtonElement;
  dismiss.onclick = () => {
    onboarding.markDone();
    showToday();
  };
  controls.append(dismiss, next);
  card.append(controls);
  screen(card);
}

// --- boot ----------------------------------------------------------------------

function boot(studyCode: string): void {
  api = new Api("", studyCode);
  queue = new OfflineQueue(kv);
  window.addEventListener("online", () => {
    if (api !== null && queue !== null) void queue.flush((p) => api!.submitResponse(p));
  });
  void showToday();
}

const existing = loadSession(kv);
if (existing !== null) {
  boot(existing.studyCode);
} else {
  showLogin();
}

// sanity: the dashboard screen may only ever contain these element roles
void ALLOWED_DASHBOARD_ELEMENTS;
