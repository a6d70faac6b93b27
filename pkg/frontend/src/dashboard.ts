/** Dashboard page logic: sizing, scroll math, and the locked-week screen.
 *
 * The page embeds the server's SVG untouched — the server is the single
 * source of geometric truth — and offers no interaction beyond vertical
 * scrolling: no zoom, no tooltips, no selection. Display width is capped per
 * orientation so that a portrait phone always fits at least three chart
 * blocks in view and a landscape one at least two.
 */

import type { DashboardLayout } from "./types.js";

export const PORTRAIT_MAX_WIDTH = 520;
export const LANDSCAPE_MAX_WIDTH = 400;
export const HEADER_CHROME = 48; // fixed app bar above the scroll area

export function displayWidth(viewportW: number, viewportH: number): number {
  const cap = viewportW > viewportH ? LANDSCAPE_MAX_WIDTH : PORTRAIT_MAX_WIDTH;
  return Math.min(viewportW, cap);
}

/** Count blocks fully visible at a given scroll offset. */
export function visibleBlockCount(
  layout: DashboardLayout,
  viewportW: number,
  viewportH: number,
  scrollY: number,
): number {
  const scale = displayWidth(viewportW, viewportH) / layout.width;
  let count = 0;
  for (const block of layout.blocks) {
    const top = HEADER_CHROME + block.y * scale - scrollY;
    const bottom = top + block.h * scale;
    if (top >= HEADER_CHROME && bottom <= viewportH) count += 1;
  }
  return count;
}

/** Best case over every scroll position, in 4px steps. */
export function maxVisibleBlocks(
  layout: DashboardLayout,
  viewportW: number,
  viewportH: number,
): number {
  const scale = displayWidth(viewportW, viewportH) / layout.width;
  const contentHeight = HEADER_CHROME + layout.height * scale;
  let best = 0;
  for (let scrollY = 0; scrollY <= contentHeight; scrollY += 4) {
    best = Math.max(best, visibleBlockCount(layout, viewportW, viewportH, scrollY));
  }
  return best;
}

/** The only widgets the dashboard screen is allowed to contain. */
export const ALLOWED_DASHBOARD_ELEMENTS = new Set(["svg-embed", "back-link"]);

export interface LockedWeekScreen {
  title: string;
  body: string;
}

/** Friendly copy for a 403: the week simply is not a dashboard week. */
export function lockedWeekScreen(): LockedWeekScreen {
  return {
    title: "Your charts are resting this week",
    body:
      "This study week is surveys-only. Your dashboard unlocks with your " +
      "next chart week — keep answering and it will be ready for you.",
  };
}
