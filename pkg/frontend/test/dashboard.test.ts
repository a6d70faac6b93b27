import { readFileSync } from "node:fs";
import { join } from "node:path";

import { describe, expect, it } from "vitest";

import {
  ALLOWED_DASHBOARD_ELEMENTS,
  HEADER_CHROME,
  LANDSCAPE_MAX_WIDTH,
  PORTRAIT_MAX_WIDTH,
  displayWidth,
  lockedWeekScreen,
  maxVisibleBlocks,
} from "../src/dashboard.js";
import type { DashboardLayout } from "../src/types.js";

function fixture(name: string): DashboardLayout {
  const raw = readFileSync(join(__dirname, "..", "fixtures", name), "utf-8");
  return JSON.parse(raw) as DashboardLayout;
}

const FULL = fixture("sample-layout.json");
const GAPPY = fixture("gappy-layout.json");

describe("display sizing", () => {
  it("caps width per orientation", () => {
    expect(displayWidth(390, 844)).toBe(390);
    expect(displayWidth(600, 900)).toBe(PORTRAIT_MAX_WIDTH);
    expect(displayWidth(844, 390)).toBe(LANDSCAPE_MAX_WIDTH);
  });
});

describe("vertical juxtaposition (DP2)", () => {
  it("portrait phone fits at least three chart blocks", () => {
    for (const layout of [FULL, GAPPY]) {
      expect(maxVisibleBlocks(layout, 390, 844)).toBeGreaterThanOrEqual(3);
    }
  });

  it("landscape phone fits at least two chart blocks", () => {
    for (const layout of [FULL, GAPPY]) {
      expect(maxVisibleBlocks(layout, 844, 390)).toBeGreaterThanOrEqual(2);
    }
  });

  it("fixture layouts carry the expected ten blocks in facet order", () => {
    expect(FULL.blocks.map((b) => b.id)).toEqual([
      "sleep", "symptom-intensity", "symptom-occurrence", "emotions",
      "worry-target", "worry-levels", "expect-vs-reality", "school",
      "peer-worry", "peer-quality",
    ]);
    const ratio = FULL.height / FULL.width;
    expect(ratio).toBeGreaterThanOrEqual(4);
    expect(ratio).toBeLessThanOrEqual(6);
  });
});

describe("scroll-only surface", () => {
  it("permits no widgets besides the embedded SVG and the back link", () => {
    expect([...ALLOWED_DASHBOARD_ELEMENTS].sort()).toEqual(["back-link", "svg-embed"]);
  });

  it("the served SVG itself contains no interactive affordances", () => {
    const svg = readFileSync(join(__dirname, "..", "sample-dashboard.svg"), "utf-8");
    for (const banned of ["<script", "onclick", "onload", "<a ", "cursor:", "<foreignObject"]) {
      expect(svg.includes(banned), banned).toBe(false);
    }
  });

  it("keeps the app chrome small enough to matter", () => {
    expect(HEADER_CHROME).toBeLessThanOrEqual(56);
  });
});

describe("locked weeks", () => {
  it("shows supportive copy, not an error dump", () => {
    const screen = lockedWeekScreen();
    expect(screen.title.toLowerCase()).not.toContain("error");
    expect(screen.body).toContain("unlocks");
  });
});
