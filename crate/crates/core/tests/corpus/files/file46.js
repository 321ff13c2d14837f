node?.path?.name(items(size.render, handler?.index.render));
index.format?.index;
if ((entry, value: Node = true) =>{
return value?.options<limit;
{
handler = false>  "a b";
return [];
}
}) {
if ("") {
var handler: Promise<User>=handler(list);
if (!user()(41)) {
return options;
} else {
let limit: Array<string> =result;
}
let entry, config= items  ===  items?.data(...node, "")(data);
}
} else if ([{ options:  19, result:  options, ...limit },items.save]) {
}
const handler = false;
