/** First-login walkthrough.
 *
 * Five screens: what the study asks, how the three daily windows work, what
 * the grey '?' marks mean, where the dashboard lives (participants in the
 * first deployment struggled to find it), and a scrollable sample dashboard
 * rendered from bundled synthetic data. Shown once after the first login,
 * dismissible at any point, and re-openable from the help link.
 */

import type { KV } from "./storage.js";

const DONE_KEY = "weeklens.onboarding.done";

export interface Slide {
  id: string;
  title: string;
  body: string;
  sampleDashboard?: boolean; // render the bundled demo SVG on this slide
}

export const SLIDES: Slide[] = [
  {
    id: "welcome",
    title: "Hi! This is your week, in your words",
    body:
      "Three short check-ins a day — morning, afternoon, evening — about " +
      "sleep, how your body feels, emotions, worries, school, and friends. " +
      "Each one takes about a minute.",
  },
  {
    id: "windows",
    title: "Three windows a day",
    body:
      "Each check-in has its own time window (morning 7–12, afternoon 12–5, " +
      "evening 5–10). We'll nudge you while a window is open. Miss one? " +
      "That's okay — the next window is a fresh start.",
  },
  {
    id: "missing",
    title: "About the grey ?",
    body:
      "Your charts show a small grey ? wherever a check-in was missed. " +
      "It's not a telling-off — it just keeps an honest gap instead of " +
      "making data up. Answering 0 is never a gap: zero is an answer.",
  },
  {
    id: "dashboard",
    title: "Where your charts live",
    body:
      "During a chart week, the Dashboard tab shows your whole week in one " +
      "tall picture you can scroll. Sleep sits on top, then symptoms, " +
      "emotions, worries, school, and friends — all lined up by day.",
  },
  {
    id: "sample",
    title: "Here's a sample week",
    body:
      "This one is made-up data, so feel free to poke around. Scrolling is " +
      "all there is to it.",
    sampleDashboard: true,
  },
];

export class Onboarding {
  constructor(private kv: KV) {}

  /** True exactly when the walkthrough has never been completed or dismissed. */
  shouldShow(): boolean {
    return this.kv.get(DONE_KEY) === null;
  }

  markDone(): void {
    this.kv.set(DONE_KEY, new Date().toISOString());
  }

  /** The help link calls this: re-open regardless of the stored flag. */
  reopen(): Slide[] {
    return SLIDES;
  }
}
