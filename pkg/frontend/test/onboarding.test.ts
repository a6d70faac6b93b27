import { describe, expect, it } from "vitest";

import { Onboarding, SLIDES } from "../src/onboarding.js";
import { MemoryKV } from "../src/storage.js";

describe("Onboarding", () => {
  it("shows on first login, not after completion", () => {
    const kv = new MemoryKV();
    const onboarding = new Onboarding(kv);
    expect(onboarding.shouldShow()).toBe(true);
    onboarding.markDone();
    expect(onboarding.shouldShow()).toBe(false);
    // a fresh session object sees the same stored flag (second login)
    expect(new Onboarding(kv).shouldShow()).toBe(false);
  });

  it("remains re-openable from the help link after dismissal", () => {
    const kv = new MemoryKV();
    const onboarding = new Onboarding(kv);
    onboarding.markDone();
    expect(onboarding.reopen()).toBe(SLIDES);
  });

  it("has four to six screens covering windows, gaps, and the dashboard", () => {
    expect(SLIDES.length).toBeGreaterThanOrEqual(4);
    expect(SLIDES.length).toBeLessThanOrEqual(6);
    const ids = SLIDES.map((s) => s.id);
    expect(ids).toContain("windows");
    expect(ids).toContain("missing");
    expect(ids).toContain("dashboard");
  });

  it("bundles a sample dashboard rendered from synthetic data", () => {
    expect(SLIDES.some((s) => s.sampleDashboard)).toBe(true);
  });

  it("never shames the user about gaps", () => {
    const text = SLIDES.map((s) => `${s.title} ${s.body}`).join(" ").toLowerCase();
    expect(text).toContain("?");
    for (const judgy of ["streak", "fail", "must ", "penal"]) {
      expect(text.includes(judgy), judgy).toBe(false);
    }
  });
});
