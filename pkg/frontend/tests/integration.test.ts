/**
 * End-to-end check against a live jobgate service.  Spawns uvicorn on a
 * scratch port, so it needs the Python package installed (pip install -e ..).
 */

import { type ChildProcess, spawn } from "node:child_process";
import { afterAll, beforeAll, describe, expect, it } from "vitest";

import { GateStatus, JobGateClient } from "../src/index";

const PORT = 8199 + Math.floor(Math.random() * 200);
const URL = `http://127.0.0.1:${PORT}`;

let server: ChildProcess;
const client = new JobGateClient(URL);

async function waitForHealth(timeoutMs = 20000): Promise<void> {
  const deadline = Date.now() + timeoutMs;
  for (;;) {
    try {
      if (await client.health()) return;
    } catch {
      // not up yet
    }
    if (Date.now() > deadline) throw new Error(`service on ${URL} never became healthy`);
    await new Promise((resolve) => setTimeout(resolve, 200));
  }
}

beforeAll(async () => {
  server = spawn("python3", ["-m", "uvicorn", "jobgate.server.app:app", "--port", String(PORT)], {
    stdio: "ignore",
  });
  await waitForHealth();
}, 30000);

afterAll(() => {
  server?.kill();
});

describe("jobgate service end to end", () => {
  it("reverses text through the staged swap service", async () => {
    expect(await client.swap("hello")).toBe("olleh");
    expect(await client.swap("")).toBe("");
  });

  it("reports a well-formed version line", async () => {
    const version = await client.version();
    expect(version).toMatch(/^JOBGATEv[0-9]+\.[0-9]+\.[0-9]+ released [0-9]{4}-[0-9]{2}-[0-9]{2}$/);
    expect(await client.version()).toBe(version);
  });

  it("finds the roots of x^2 - 1", async () => {
    const roots = await client.polyroots([-1, 0, 1]);
    expect(roots).toHaveLength(2);
    expect(Math.abs(roots[0].real + 1)).toBeLessThanOrEqual(1e-10);
    expect(Math.abs(roots[0].imag)).toBeLessThanOrEqual(1e-10);
    expect(Math.abs(roots[1].real - 1)).toBeLessThanOrEqual(1e-10);
    expect(Math.abs(roots[1].imag)).toBeLessThanOrEqual(1e-10);
  });

  it("drives the raw gate with the classic int32 sequence", async () => {
    let buffer = [104, 101, 108, 108, 111];
    for (const job of [0, 1, 2]) {
      const result = await client.call(job, buffer);
      expect(result.status).toBe(GateStatus.Ok);
      buffer = result.data;
    }
    expect(buffer).toEqual([111, 108, 108, 101, 104]);
  });

  it("reports documented statuses for bad traffic", async () => {
    expect((await client.call(7000, [])).status).toBe(GateStatus.UnknownJob);
    await client.final();
    expect((await client.call(0, [])).status).toBe(GateStatus.NotInitialized);
    await client.init();
  });

  it("exposes the service map", async () => {
    const manifest = await client.manifest();
    expect(manifest.library).toBe("jobgate");
    expect(manifest.services.map((s) => s.base)).toEqual([0, 40, 50]);
  });
});
