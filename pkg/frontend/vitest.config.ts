import { defineConfig } from "vitest/config";

export default defineConfig({
  test: {
    // integration tests spawn the Python CLI, including full law-suite runs
    testTimeout: 120_000,
  },
});
