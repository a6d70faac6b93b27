/** Offline submission queue.
 *
 * Responses keep the submitted_at they were built with, so a survey filled in
 * on a dead connection still lands in the right slot with its honest
 * timestamp. FIFO order is preserved per slot: a flush stops at the first
 * network failure rather than skipping ahead, so two submissions for the
 * same slot can never swap revisions. Server-side rejections (4xx) are
 * consumed — retrying them forever would wedge the queue.
 */

import type { EmaResponsePayload, SubmitResult } from "./types.js";
import type { KV } from "./storage.js";

const QUEUE_KEY = "weeklens.queue";

export type SubmitFn = (payload: EmaResponsePayload) => Promise<SubmitResult>;

export interface FlushReport {
  submitted: number;
  rejected: number;
  remaining: number;
}

export class OfflineQueue {
  private items: EmaResponsePayload[] = [];

  constructor(private kv: KV) {
    const raw = this.kv.get(QUEUE_KEY);
    if (raw !== null) {
      try {
        this.items = JSON.parse(raw) as EmaResponsePayload[];
      } catch {
        this.items = [];
      }
    }
  }

  private save(): void {
    this.kv.set(QUEUE_KEY, JSON.stringify(this.items));
  }

  get size(): number {
    return this.items.length;
  }

  pending(): readonly EmaResponsePayload[] {
    return this.items;
  }

  enqueue(payload: EmaResponsePayload): void {
    this.items.push(payload);
    this.save();
  }

  /** Submit queued payloads in order. Stops at the first network failure. */
  async flush(submit: SubmitFn): Promise<FlushReport> {
    let submitted = 0;
    let rejected = 0;
    while (this.items.length > 0) {
      const head = this.items[0]!;
      try {
        await submit(head);
        submitted += 1;
      } catch (error) {
        if (isServerRejection(error)) {
          rejected += 1; // invalid payload: drop it, keep draining
        } else {
          break; // network trouble: preserve order, try again later
        }
      }
      this.items.shift();
      this.save();
    }
    return { submitted, rejected, remaining: this.items.length };
  }
}

function isServerRejection(error: unknown): boolean {
  return (
    typeof error === "object" &&
    error !== null &&
    "status" in error &&
    typeof (error as { status: unknown }).status === "number" &&
    (error as { status: number }).status >= 400 &&
    (error as { status: number }).status < 500
  );
}
