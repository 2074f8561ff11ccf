/** Scene fetching with validation; failures become displayable errors. */

import { parseSceneDoc, SceneFormatError, type SceneDoc } from "./types.js";

export class SceneLoadError extends Error {}

export async function loadScene(
  url: string,
  fetcher: typeof fetch = fetch,
): Promise<SceneDoc> {
  let response: Response;
  try {
    response = await fetcher(url);
  } catch (err) {
    throw new SceneLoadError(`cannot reach ${url}: ${String(err)}`);
  }
  if (!response.ok) {
    throw new SceneLoadError(`${url} answered ${response.status}`);
  }
  let data: unknown;
  try {
    data = await response.json();
  } catch (err) {
    throw new SceneLoadError(`${url} is not valid JSON: ${String(err)}`);
  }
  try {
    return parseSceneDoc(data);
  } catch (err) {
    if (err instanceof SceneFormatError) {
      throw new SceneLoadError(`invalid scene document: ${err.message}`);
    }
    throw err;
  }
}
