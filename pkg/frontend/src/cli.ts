/**
 * Small command-line front over JobGateClient.
 *
 *   node dist/cli.js [--url URL] swap <text>
 *   node dist/cli.js [--url URL] version
 *   node dist/cli.js [--url URL] polyroots <c0> <c1> ...
 */

import { JobGateClient, JobGateError } from "./index.js";

async function run(argv: string[]): Promise<number> {
  let url = "http://127.0.0.1:8000";
  const args = [...argv];
  const urlIndex = args.indexOf("--url");
  if (urlIndex >= 0) {
    url = args[urlIndex + 1];
    if (!url) {
      console.error("jobgate-client: --url needs a value");
      return 1;
    }
    args.splice(urlIndex, 2);
  }
  const [command, ...rest] = args.filter((arg) => arg !== "--");
  const client = new JobGateClient(url);

  switch (command) {
    case "swap": {
      if (rest.length !== 1) {
        console.error("usage: swap <text>");
        return 1;
      }
      console.log(await client.swap(rest[0]));
      return 0;
    }
    case "version": {
      console.log(await client.version());
      return 0;
    }
    case "polyroots": {
      const coefficients = rest.map(Number);
      if (coefficients.length < 2 || coefficients.some(Number.isNaN)) {
        console.error("usage: polyroots <c0> <c1> ... (at least two numeric coefficients)");
        return 1;
      }
      for (const root of await client.polyroots(coefficients)) {
        console.log(`${root.real} ${root.imag}`);
      }
      return 0;
    }
    default: {
      console.error("usage: [--url URL] swap <text> | version | polyroots <c0> <c1> ...");
      return 1;
    }
  }
}

run(process.argv.slice(2))
  .then((code) => {
    process.exitCode = code;
  })
  .catch((error: unknown) => {
    const message = error instanceof JobGateError ? error.message : String(error);
    console.error(`jobgate-client: ${message}`);
    process.exitCode = 1;
  });
