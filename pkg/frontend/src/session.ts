/** Client session: the study code plus a little sticky state. */

import type { KV } from "./storage.js";
import type { ClientSession } from "./types.js";

const SESSION_KEY = "weeklens.session";

export function loadSession(kv: KV): ClientSession | null {
  const raw = kv.get(SESSION_KEY);
  if (raw === null) return null;
  try {
    return JSON.parse(raw) as ClientSession;
  } catch {
    return null;
  }
}

export function saveSession(kv: KV, session: ClientSession): void {
  kv.set(SESSION_KEY, JSON.stringify(session));
}

export function startSession(kv: KV, studyCode: string): ClientSession {
  const session: ClientSession = {
    studyCode: studyCode.trim(),
    timezone: Intl.DateTimeFormat().resolvedOptions().timeZone ?? "UTC",
    definitionVersion: null,
    onboardingDone: false,
  };
  saveSession(kv, session);
  return session;
}

export function clearSession(kv: KV): void {
  kv.remove(SESSION_KEY);
}
